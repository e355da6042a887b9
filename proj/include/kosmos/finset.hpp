#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "kosmos/errors.hpp"

namespace kosmos {

/* Finite sets with a strictified tensor: the product of index sets under the
   row-major pairing (i, j) -> i*|y| + j.  Associativity and both unitors are
   identities on the nose; the symmetry stays a genuine permutation. */

struct FinObj {
    std::size_t size = 0;
    std::vector<std::string> labels;  // empty or one label per element
};

struct FinMap {
    FinObj dom;
    FinObj cod;
    std::vector<std::size_t> table;  // table[i] < cod.size, length dom.size
};

inline FinObj fin_obj(std::size_t size) { return FinObj{size, {}}; }

inline FinObj fin_kappa() { return fin_obj(1); }

inline bool same_obj(const FinObj& a, const FinObj& b) { return a.size == b.size; }

inline void check_map(const FinMap& f, const char* where)
{
    if (f.table.size() != f.dom.size)
        throw shape_mismatch(std::string(where) + ": table length != dom size");
    for (std::size_t i = 0; i < f.table.size(); ++i)
        if (f.table[i] >= f.cod.size)
            throw shape_mismatch(std::string(where) + ": entry out of codomain");
}

inline FinMap identity(const FinObj& x)
{
    FinMap f{x, x, std::vector<std::size_t>(x.size)};
    std::iota(f.table.begin(), f.table.end(), std::size_t{0});
    return f;
}

inline FinMap compose(const FinMap& f, const FinMap& g)
{
    if (!same_obj(f.dom, g.cod))
        throw shape_mismatch("compose: middle objects disagree");
    FinMap h{g.dom, f.cod, std::vector<std::size_t>(g.dom.size)};
    for (std::size_t i = 0; i < h.table.size(); ++i)
        h.table[i] = f.table[g.table[i]];
    return h;
}

template <class... Ms>
FinMap compose(const FinMap& f, const FinMap& g, const Ms&... rest)
{
    return compose(f, compose(g, rest...));
}

inline bool equals(const FinMap& f, const FinMap& g)
{
    if (!same_obj(f.dom, g.dom) || !same_obj(f.cod, g.cod))
        throw shape_mismatch("equals: maps are not parallel");
    return f.table == g.table;
}

inline FinObj tensor_obj(const FinObj& x, const FinObj& y)
{
    FinObj t{x.size * y.size, {}};
    if (!x.labels.empty() && !y.labels.empty()) {
        t.labels.reserve(t.size);
        for (const auto& a : x.labels)
            for (const auto& b : y.labels)
                t.labels.push_back("(" + a + "," + b + ")");
    }
    return t;
}

inline FinMap tensor_map(const FinMap& f, const FinMap& g)
{
    FinMap h{tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod), {}};
    h.table.resize(h.dom.size);
    const std::size_t gd = g.dom.size, gc = g.cod.size;
    for (std::size_t i = 0; i < f.dom.size; ++i)
        for (std::size_t j = 0; j < gd; ++j)
            h.table[i * gd + j] = f.table[i] * gc + g.table[j];
    return h;
}

inline FinMap symmetry(const FinObj& x, const FinObj& y)
{
    FinMap s{tensor_obj(x, y), tensor_obj(y, x), {}};
    s.table.resize(s.dom.size);
    for (std::size_t i = 0; i < x.size; ++i)
        for (std::size_t j = 0; j < y.size; ++j)
            s.table[i * y.size + j] = j * x.size + i;
    return s;
}

enum class Coherence { Assoc, LeftUnit, RightUnit };

/* All coherence morphisms are identities under the strict encoding; they are
   exposed so that client composites can mirror their written form. */
inline FinMap coherence(Coherence kind, const FinObj& x, const FinObj& y = fin_obj(1),
                        const FinObj& z = fin_obj(1))
{
    switch (kind) {
    case Coherence::Assoc:
        return identity(tensor_obj(tensor_obj(x, y), z));
    case Coherence::LeftUnit:
    case Coherence::RightUnit:
        return identity(x);
    }
    throw KosmosError("Internal", "unknown coherence kind");
}

/* Structural maps every composite needs: the unique map to the point, the
   insertion of a point, and the diagonal. */
inline FinMap terminal_map(const FinObj& x)
{
    return FinMap{x, fin_kappa(), std::vector<std::size_t>(x.size, 0)};
}

inline FinMap point(const FinObj& x, std::size_t i)
{
    if (i >= x.size)
        throw shape_mismatch("point: index out of range");
    return FinMap{fin_kappa(), x, {i}};
}

inline FinMap diagonal(const FinObj& x)
{
    FinMap d{x, tensor_obj(x, x), std::vector<std::size_t>(x.size)};
    for (std::size_t i = 0; i < x.size; ++i)
        d.table[i] = i * x.size + i;
    return d;
}

/* Quotient of the codomain of a reflexive parallel pair, with canonical class
   order: classes are sorted by their minimal member and labeled by it. */

struct CoeqResult {
    FinObj obj;
    FinMap proj;  // surjection B -> obj
    FinMap f, g;  // the defining parallel pair A => B
};

namespace detail {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

    std::size_t find(std::size_t a)
    {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (a < b)
            std::swap(a, b);  // keep the smaller index as root
        parent[a] = b;
    }
};

}

inline CoeqResult reflexive_coequalizer(const FinMap& f, const FinMap& g, const FinMap& s)
{
    if (!same_obj(f.dom, g.dom) || !same_obj(f.cod, g.cod))
        throw shape_mismatch("reflexive_coequalizer: pair is not parallel");
    if (!same_obj(s.dom, f.cod) || !same_obj(s.cod, f.dom))
        throw shape_mismatch("reflexive_coequalizer: section has wrong shape");
    const FinMap idB = identity(f.cod);
    if (!equals(compose(f, s), idB) || !equals(compose(g, s), idB))
        throw KosmosError("SectionInvalid", "f or g does not restrict to the identity along s");

    detail::UnionFind uf(f.cod.size);
    for (std::size_t a = 0; a < f.dom.size; ++a)
        uf.unite(f.table[a], g.table[a]);

    std::vector<std::size_t> roots;
    for (std::size_t b = 0; b < f.cod.size; ++b)
        if (uf.find(b) == b)
            roots.push_back(b);
    std::sort(roots.begin(), roots.end());

    std::vector<std::size_t> class_of(f.cod.size);
    for (std::size_t c = 0; c < roots.size(); ++c)
        class_of[roots[c]] = c;

    CoeqResult res;
    res.obj.size = roots.size();
    res.obj.labels.reserve(roots.size());
    for (std::size_t r : roots)
        res.obj.labels.push_back(f.cod.labels.empty() ? std::to_string(r) : f.cod.labels[r]);
    res.proj = FinMap{f.cod, res.obj, std::vector<std::size_t>(f.cod.size)};
    for (std::size_t b = 0; b < f.cod.size; ++b)
        res.proj.table[b] = class_of[uf.find(b)];
    res.f = f;
    res.g = g;
    return res;
}

inline FinMap coeq_factor(const CoeqResult& res, const FinMap& h)
{
    if (!same_obj(h.dom, res.proj.dom))
        throw shape_mismatch("coeq_factor: h has the wrong domain");
    for (std::size_t a = 0; a < res.f.dom.size; ++a)
        if (h.table[res.f.table[a]] != h.table[res.g.table[a]])
            throw KosmosError("NotCoequalizing",
                              "h disagrees on the pair generated at index " + std::to_string(a));
    FinMap u{res.obj, h.cod, std::vector<std::size_t>(res.obj.size)};
    for (std::size_t b = 0; b < res.proj.table.size(); ++b)
        u.table[res.proj.table[b]] = h.table[b];
    return u;
}

/* Factor h through a plain surjection q (not necessarily a coequalizer
   projection): defined when h is constant on the fibers of q. */
inline FinMap surjection_factor(const FinMap& q, const FinMap& h, const char* where)
{
    if (!same_obj(q.dom, h.dom))
        throw shape_mismatch(std::string(where) + ": factoring maps have different domains");
    std::vector<std::optional<std::size_t>> val(q.cod.size);
    for (std::size_t a = 0; a < q.table.size(); ++a) {
        auto& slot = val[q.table[a]];
        if (slot && *slot != h.table[a])
            throw KosmosError("NotConstantOnFibers",
                              std::string(where) + ": no factorization exists (fiber " +
                                  std::to_string(q.table[a]) + ")");
        slot = h.table[a];
    }
    FinMap u{q.cod, h.cod, std::vector<std::size_t>(q.cod.size)};
    for (std::size_t b = 0; b < q.cod.size; ++b) {
        if (!val[b])
            throw KosmosError("NotSurjective", std::string(where) + ": fiber " + std::to_string(b) + " is empty");
        u.table[b] = *val[b];
    }
    return u;
}

}
