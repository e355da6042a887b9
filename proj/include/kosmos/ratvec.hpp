#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kosmos/errors.hpp"
#include "kosmos/rational.hpp"

namespace kosmos {

/* Finite dimensional vector spaces over the exact rationals, with the same
   strictified row-major tensor encoding as the finite set side.  Morphisms are
   matrices acting on column vectors: (f.compose.g).matrix = f.matrix * g.matrix. */

struct RatObj {
    std::size_t dim = 0;
    std::vector<std::string> labels;
};

using Matrix = std::vector<std::vector<Rat>>;  // rows; matrix[i][j], cod.dim rows

struct RatMap {
    RatObj dom;
    RatObj cod;
    Matrix matrix;
};

inline RatObj rat_obj(std::size_t dim) { return RatObj{dim, {}}; }

inline RatObj rat_kappa() { return rat_obj(1); }

inline bool same_obj(const RatObj& a, const RatObj& b) { return a.dim == b.dim; }

inline Matrix zero_matrix(std::size_t rows, std::size_t cols)
{
    return Matrix(rows, std::vector<Rat>(cols, Rat(0)));
}

inline void check_map(const RatMap& f, const char* where)
{
    if (f.matrix.size() != f.cod.dim)
        throw shape_mismatch(std::string(where) + ": row count != cod dim");
    for (const auto& row : f.matrix)
        if (row.size() != f.dom.dim)
            throw shape_mismatch(std::string(where) + ": column count != dom dim");
}

inline RatMap identity(const RatObj& x)
{
    RatMap f{x, x, zero_matrix(x.dim, x.dim)};
    for (std::size_t i = 0; i < x.dim; ++i)
        f.matrix[i][i] = 1;
    return f;
}

inline RatMap zero_map(const RatObj& dom, const RatObj& cod)
{
    return RatMap{dom, cod, zero_matrix(cod.dim, dom.dim)};
}

inline RatMap compose(const RatMap& f, const RatMap& g)
{
    if (!same_obj(f.dom, g.cod))
        throw shape_mismatch("compose: middle objects disagree");
    RatMap h{g.dom, f.cod, zero_matrix(f.cod.dim, g.dom.dim)};
    for (std::size_t i = 0; i < f.cod.dim; ++i)
        for (std::size_t k = 0; k < f.dom.dim; ++k) {
            const Rat& a = f.matrix[i][k];
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < g.dom.dim; ++j) {
                const Rat& b = g.matrix[k][j];
                if (b == 0)
                    continue;
                h.matrix[i][j] += a * b;
            }
        }
    return h;
}

template <class... Ms>
RatMap compose(const RatMap& f, const RatMap& g, const Ms&... rest)
{
    return compose(f, compose(g, rest...));
}

inline bool equals(const RatMap& f, const RatMap& g)
{
    if (!same_obj(f.dom, g.dom) || !same_obj(f.cod, g.cod))
        throw shape_mismatch("equals: maps are not parallel");
    return f.matrix == g.matrix;
}

inline RatObj tensor_obj(const RatObj& x, const RatObj& y)
{
    RatObj t{x.dim * y.dim, {}};
    if (!x.labels.empty() && !y.labels.empty()) {
        t.labels.reserve(t.dim);
        for (const auto& a : x.labels)
            for (const auto& b : y.labels)
                t.labels.push_back("(" + a + "," + b + ")");
    }
    return t;
}

inline RatMap tensor_map(const RatMap& f, const RatMap& g)
{
    RatMap h{tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod), {}};
    h.matrix = zero_matrix(h.cod.dim, h.dom.dim);
    const std::size_t gc = g.cod.dim, gd = g.dom.dim;
    for (std::size_t i1 = 0; i1 < f.cod.dim; ++i1)
        for (std::size_t j1 = 0; j1 < f.dom.dim; ++j1) {
            const Rat& a = f.matrix[i1][j1];
            if (a == 0)
                continue;
            for (std::size_t i2 = 0; i2 < gc; ++i2)
                for (std::size_t j2 = 0; j2 < gd; ++j2) {
                    const Rat& b = g.matrix[i2][j2];
                    if (b == 0)
                        continue;
                    h.matrix[i1 * gc + i2][j1 * gd + j2] = a * b;
                }
        }
    return h;
}

inline RatMap symmetry(const RatObj& x, const RatObj& y)
{
    RatMap s{tensor_obj(x, y), tensor_obj(y, x), zero_matrix(x.dim * y.dim, x.dim * y.dim)};
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t j = 0; j < y.dim; ++j)
            s.matrix[j * x.dim + i][i * y.dim + j] = 1;
    return s;
}

enum class RatCoherence { Assoc, LeftUnit, RightUnit };

inline RatMap coherence(RatCoherence kind, const RatObj& x, const RatObj& y = rat_obj(1),
                        const RatObj& z = rat_obj(1))
{
    switch (kind) {
    case RatCoherence::Assoc:
        return identity(tensor_obj(tensor_obj(x, y), z));
    case RatCoherence::LeftUnit:
    case RatCoherence::RightUnit:
        return identity(x);
    }
    throw KosmosError("Internal", "unknown coherence kind");
}

/* Row reduction to reduced row echelon form; returns the pivot columns.
   Works in place and is fully exact. */
inline std::vector<std::size_t> rref(Matrix& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[sel], m[r]);
        const Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rat factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= factor * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/* Canonical basis of ker(m) as columns in reduced column echelon form:
   the unique basis whose transpose is an RREF matrix. */
inline Matrix kernel_columns(const Matrix& m, std::size_t cols)
{
    Matrix work = m;
    const std::vector<std::size_t> pivots = rref(work);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    Matrix span;  // kernel vectors as rows
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c])
            continue;
        std::vector<Rat> v(cols, Rat(0));
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -work[r][c];
        span.push_back(std::move(v));
    }
    rref(span);
    Matrix basis = zero_matrix(cols, span.size());
    for (std::size_t k = 0; k < span.size(); ++k)
        for (std::size_t i = 0; i < cols; ++i)
            basis[i][k] = span[k][i];
    return basis;
}

/* Exact solve A X = B for A with full column rank; nullopt when inconsistent. */
inline std::optional<Matrix> solve_exact(const Matrix& a, const Matrix& b)
{
    const std::size_t rows = a.size();
    const std::size_t acols = rows ? a[0].size() : 0;
    const std::size_t bcols = b.empty() ? 0 : b[0].size();
    if (b.size() != rows)
        throw shape_mismatch("solve_exact: row counts differ");
    Matrix aug(rows, std::vector<Rat>(acols + bcols, Rat(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < acols; ++j)
            aug[i][j] = a[i][j];
        for (std::size_t j = 0; j < bcols; ++j)
            aug[i][acols + j] = b[i][j];
    }
    const std::vector<std::size_t> pivots = rref(aug);
    for (std::size_t c : pivots)
        if (c >= acols)
            return std::nullopt;  // inconsistent system
    if (pivots.size() != acols)
        return std::nullopt;  // rank deficient, solution not unique
    Matrix x = zero_matrix(acols, bcols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < bcols; ++j)
            x[pivots[r]][j] = aug[r][acols + j];
    return x;
}

struct EqResult {
    RatObj obj;
    RatMap incl;  // injection obj -> ambient, reduced column echelon
    RatMap f, g;  // the defining parallel pair V => W
};

inline EqResult coreflexive_equalizer(const RatMap& f, const RatMap& g, const RatMap& r)
{
    if (!same_obj(f.dom, g.dom) || !same_obj(f.cod, g.cod))
        throw shape_mismatch("coreflexive_equalizer: pair is not parallel");
    if (!same_obj(r.dom, f.cod) || !same_obj(r.cod, f.dom))
        throw shape_mismatch("coreflexive_equalizer: retraction has wrong shape");
    const RatMap idV = identity(f.dom);
    if (!equals(compose(r, f), idV) || !equals(compose(r, g), idV))
        throw KosmosError("RetractionInvalid", "r does not retract f and g to the identity");

    Matrix diff = zero_matrix(f.cod.dim, f.dom.dim);
    for (std::size_t i = 0; i < f.cod.dim; ++i)
        for (std::size_t j = 0; j < f.dom.dim; ++j)
            diff[i][j] = f.matrix[i][j] - g.matrix[i][j];

    EqResult res;
    Matrix basis = kernel_columns(diff, f.dom.dim);
    res.obj.dim = basis.empty() ? 0 : basis[0].size();
    res.incl = RatMap{res.obj, f.dom, std::move(basis)};
    if (res.obj.dim == 0)
        res.incl.matrix = zero_matrix(f.dom.dim, 0);
    res.f = f;
    res.g = g;
    return res;
}

inline RatMap eq_factor(const EqResult& res, const RatMap& h)
{
    if (!same_obj(h.cod, res.incl.cod))
        throw shape_mismatch("eq_factor: h does not land in the ambient space");
    if (!equals(compose(res.f, h), compose(res.g, h)))
        throw KosmosError("NotEqualizing", "f.h != g.h");
    auto u = solve_exact(res.incl.matrix, h.matrix);
    if (!u)
        throw KosmosError("NotEqualizing", "h is not in the span of the equalizer");
    return RatMap{h.dom, res.obj, std::move(*u)};
}

/* Factor h through a plain injection j (j u = h); defined when h lands in the image. */
inline RatMap injection_factor(const RatMap& j, const RatMap& h, const char* where)
{
    if (!same_obj(j.cod, h.cod))
        throw shape_mismatch(std::string(where) + ": factoring maps have different codomains");
    auto u = solve_exact(j.matrix, h.matrix);
    if (!u)
        throw KosmosError("NotInImage", std::string(where) + ": no factorization exists");
    return RatMap{h.dom, j.dom, std::move(*u)};
}

}
