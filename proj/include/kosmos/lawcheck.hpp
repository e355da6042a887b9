#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kosmos/finset.hpp"
#include "kosmos/ratvec.hpp"

namespace kosmos {

/* Equations are fully evaluated morphism values, never terms: both sides of a
   diagram are composed down to a single table or matrix and compared exactly.
   A failing comparison reports the smallest failing input index (finite sets)
   or the first failing standard basis vector (rational spaces). */

struct Witness {
    std::size_t index = 0;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string name;
    bool passed = false;
    std::optional<Witness> witness;
    std::string anchor;
};

template <class M>
struct Equation {
    std::string name;
    M lhs;
    M rhs;
    std::string anchor;
};

inline Equation<FinMap> make_eq(std::string name, FinMap lhs, FinMap rhs, std::string anchor)
{
    return Equation<FinMap>{std::move(name), std::move(lhs), std::move(rhs), std::move(anchor)};
}

inline Equation<RatMap> make_eq(std::string name, RatMap lhs, RatMap rhs, std::string anchor)
{
    return Equation<RatMap>{std::move(name), std::move(lhs), std::move(rhs), std::move(anchor)};
}

inline Report check_equation(const Equation<FinMap>& eq)
{
    if (!same_obj(eq.lhs.dom, eq.rhs.dom) || !same_obj(eq.lhs.cod, eq.rhs.cod))
        throw shape_mismatch("check_equation: " + eq.name);
    Report rep{eq.name, true, std::nullopt, eq.anchor};
    for (std::size_t i = 0; i < eq.lhs.table.size(); ++i)
        if (eq.lhs.table[i] != eq.rhs.table[i]) {
            rep.passed = false;
            rep.witness = Witness{i, std::to_string(eq.lhs.table[i]), std::to_string(eq.rhs.table[i])};
            break;
        }
    return rep;
}

namespace detail {

inline std::string column_str(const Matrix& m, std::size_t j)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            os << ", ";
        os << rat_str(m[i][j]);
    }
    os << ")";
    return os.str();
}

inline std::string witness_detail(const Report& r)
{
    std::string out = r.name;
    if (r.witness) {
        out += " fails at index " + std::to_string(r.witness->index) + ": " + r.witness->lhs +
               " != " + r.witness->rhs;
    }
    return out;
}

inline std::string strip_kind(const KosmosError& e)
{
    std::string what = e.what();
    std::string prefix = e.kind + ": ";
    if (what.rfind(prefix, 0) == 0)
        return what.substr(prefix.size());
    return what;
}

}

inline Report check_equation(const Equation<RatMap>& eq)
{
    if (!same_obj(eq.lhs.dom, eq.rhs.dom) || !same_obj(eq.lhs.cod, eq.rhs.cod))
        throw shape_mismatch("check_equation: " + eq.name);
    Report rep{eq.name, true, std::nullopt, eq.anchor};
    for (std::size_t j = 0; j < eq.lhs.dom.dim && rep.passed; ++j)
        for (std::size_t i = 0; i < eq.lhs.cod.dim; ++i)
            if (eq.lhs.matrix[i][j] != eq.rhs.matrix[i][j]) {
                rep.passed = false;
                rep.witness = Witness{j, detail::column_str(eq.lhs.matrix, j),
                                      detail::column_str(eq.rhs.matrix, j)};
                break;
            }
    return rep;
}

inline bool all_passed(const std::vector<Report>& reports)
{
    for (const auto& r : reports)
        if (!r.passed)
            return false;
    return true;
}

/* Inverse of a bijection between finite sets; the error witness names either a
   collision pair or a size mismatch. */
inline FinMap certify_iso(const FinMap& f)
{
    if (f.dom.size != f.cod.size)
        throw KosmosError("NotBijective", "domain size " + std::to_string(f.dom.size) +
                                              " != codomain size " + std::to_string(f.cod.size));
    std::vector<std::optional<std::size_t>> pre(f.cod.size);
    for (std::size_t i = 0; i < f.table.size(); ++i) {
        auto& slot = pre[f.table[i]];
        if (slot)
            throw KosmosError("NotBijective", "collision: " + std::to_string(*slot) + " and " +
                                                  std::to_string(i) + " both map to " +
                                                  std::to_string(f.table[i]));
        slot = i;
    }
    FinMap inv{f.cod, f.dom, std::vector<std::size_t>(f.cod.size)};
    for (std::size_t j = 0; j < f.cod.size; ++j)
        inv.table[j] = *pre[j];
    return inv;
}

/* Exact matrix inverse by Gauss-Jordan elimination. */
inline RatMap certify_iso(const RatMap& f)
{
    if (f.dom.dim != f.cod.dim)
        throw KosmosError("NotInvertible", "matrix is not square");
    const std::size_t n = f.dom.dim;
    Matrix aug = zero_matrix(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = f.matrix[i][j];
        aug[i][n + i] = 1;
    }
    const std::vector<std::size_t> pivots = rref(aug);
    std::size_t rank = 0;
    for (std::size_t c : pivots)
        if (c < n)
            ++rank;
    if (rank != n)
        throw KosmosError("NotInvertible", "rank " + std::to_string(rank) + " < " + std::to_string(n));
    RatMap inv{f.cod, f.dom, zero_matrix(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.matrix[i][j] = aug[i][n + j];
    return inv;
}

}
