#pragma once

#include <string>
#include <vector>

#include "kosmos/finset.hpp"
#include "kosmos/group.hpp"
#include "kosmos/lawcheck.hpp"

namespace kosmos {

/* Left actions pi (x) x -> x of a finite group object, together with what the
   strict tensor induces on them: the free/forget and orbit/trivial
   adjunctions, the projection formula, and the fusion operator. */

struct GalRep {
    FinGroupObj group;
    FinObj carrier;
    FinMap action;  // pi (x) carrier -> carrier
};

struct GalRepMor {
    GalRep src;
    GalRep dst;
    FinMap map;
};

inline bool same_group(const FinGroupObj& a, const FinGroupObj& b)
{
    return a.carrier.size == b.carrier.size && a.mul.table == b.mul.table && a.unit == b.unit &&
           a.inv.table == b.inv.table;
}

/* Comonoid structure of the group factor: duplicate it past the middle
   symmetry, or drop it. */
inline FinMap colax_pair(const FinGroupObj& g, const FinObj& x, const FinObj& y)
{
    const FinObj& p = g.carrier;
    return compose(tensor_map(tensor_map(identity(p), symmetry(p, x)), identity(y)),
                   tensor_map(comul_map(g), identity(tensor_obj(x, y))));
}

inline FinMap drop_action(const FinGroupObj& g, const FinObj& x)
{
    return compose(coherence(Coherence::LeftUnit, x), tensor_map(counit_map(g), identity(x)));
}

inline std::vector<Report> rep_axioms(const GalRep& X)
{
    const FinGroupObj& g = X.group;
    const FinObj& p = g.carrier;
    const FinObj& x = X.carrier;
    std::vector<Report> out;
    out.push_back(check_equation(make_eq(
        "action associativity",
        compose(X.action, tensor_map(g.mul, identity(x)), coherence(Coherence::Assoc, p, p, x)),
        compose(X.action, tensor_map(identity(p), X.action)), "rep.assoc")));
    out.push_back(check_equation(make_eq(
        "action unit",
        compose(X.action, tensor_map(unit_map(g), identity(x)), coherence(Coherence::LeftUnit, x)),
        identity(x), "rep.unit")));
    return out;
}

inline Report check_rep_mor(const GalRepMor& m)
{
    if (!same_group(m.src.group, m.dst.group))
        throw KosmosError("GroupMismatch", "morphism endpoints live over different groups");
    return check_equation(make_eq(
        "equivariance", compose(m.map, m.src.action),
        compose(m.dst.action, tensor_map(identity(m.src.group.carrier), m.map)), "rep.mor"));
}

inline GalRep rep_tensor(const GalRep& X, const GalRep& Y)
{
    if (!same_group(X.group, Y.group))
        throw KosmosError("GroupMismatch", "tensor factors live over different groups");
    FinMap action =
        compose(tensor_map(X.action, Y.action), colax_pair(X.group, X.carrier, Y.carrier));
    return GalRep{X.group, tensor_obj(X.carrier, Y.carrier), action};
}

inline GalRep trivial_rep(const FinGroupObj& g, const FinObj& z)
{
    return GalRep{g, z, drop_action(g, z)};
}

inline GalRep rep_unit(const FinGroupObj& g) { return trivial_rep(g, fin_kappa()); }

/* Free action on pi (x) x by multiplication into the left factor.  The
   adjunction unit inserts the group unit; the counit at X is X.action. */
inline GalRep free_rep(const FinGroupObj& g, const FinObj& x)
{
    const FinObj& p = g.carrier;
    FinMap action = compose(tensor_map(g.mul, identity(x)), coherence(Coherence::Assoc, p, p, x));
    return GalRep{g, tensor_obj(p, x), action};
}

inline FinMap free_unit(const FinGroupObj& g, const FinObj& x)
{
    return compose(tensor_map(unit_map(g), identity(x)), coherence(Coherence::LeftUnit, x));
}

inline CoeqResult coinvariants(const GalRep& X)
{
    return reflexive_coequalizer(X.action, drop_action(X.group, X.carrier),
                                 free_unit(X.group, X.carrier));
}

/* Orbit/trivial adjunction: the unit is the orbit projection seen as an
   equivariant map into the trivial action on the orbit space, the counit
   collapses the orbits of an already trivial action. */
inline GalRepMor orbit_unit(const GalRep& X)
{
    CoeqResult q = coinvariants(X);
    return GalRepMor{X, trivial_rep(X.group, q.obj), q.proj};
}

inline FinMap orbit_counit(const FinGroupObj& g, const FinObj& z)
{
    return coeq_factor(coinvariants(trivial_rep(g, z)), identity(z));
}

/* All equivariant maps X -> Y, in most-significant-digit order of their value
   tables.  Refuses to scan more than a million candidates. */
inline std::vector<GalRepMor> hom_rep(const GalRep& X, const GalRep& Y)
{
    if (!same_group(X.group, Y.group))
        throw KosmosError("GroupMismatch", "hom endpoints live over different groups");
    const std::size_t n = X.carrier.size, m = Y.carrier.size;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= m;
        if (total > 1000000)
            throw KosmosError("CarrierTooLarge",
                              std::to_string(m) + "^" + std::to_string(n) +
                                  " candidate maps exceed the enumeration limit");
    }
    std::vector<GalRepMor> out;
    for (std::size_t k = 0; k < total; ++k) {
        std::vector<std::size_t> tab(n);
        std::size_t rem = k;
        for (std::size_t i = n; i-- > 0;) {
            tab[i] = rem % m;
            rem /= m;
        }
        bool ok = true;
        for (std::size_t e = 0; e < X.action.table.size() && ok; ++e)
            ok = tab[X.action.table[e]] == Y.action.table[(e / n) * m + tab[e % n]];
        if (ok)
            out.push_back(GalRepMor{X, Y, FinMap{X.carrier, Y.carrier, std::move(tab)}});
    }
    return out;
}

/* The projection isomorphism pi (x) z (x) x -> pi (x) z (x) x lets the group
   copy act on the right factor; its stated inverse routes the copy through the
   inversion first. */
struct FinProjectionCheck {
    FinMap forward;
    FinMap inverse;
    std::vector<Report> reports;
};

inline FinMap projection_forward(const FinObj& z, const GalRep& X)
{
    const FinGroupObj& g = X.group;
    return compose(tensor_map(identity(tensor_obj(g.carrier, z)), X.action),
                   colax_pair(g, z, X.carrier));
}

inline FinMap projection_inverse(const FinObj& z, const GalRep& X)
{
    const FinGroupObj& g = X.group;
    const FinObj pz = tensor_obj(g.carrier, z);
    return compose(tensor_map(identity(pz), X.action),
                   tensor_map(tensor_map(identity(pz), g.inv), identity(X.carrier)),
                   colax_pair(g, z, X.carrier));
}

inline Report projection_negative_control(const FinObj& z, const GalRep& X)
{
    const FinMap phi = projection_forward(z, X);
    return check_equation(make_eq("projection inverse without antipode", compose(phi, phi),
                                  identity(phi.dom), "rep.projection.control"));
}

inline FinProjectionCheck projection_formula_check(const FinObj& z, const GalRep& X)
{
    FinProjectionCheck out{projection_forward(z, X), projection_inverse(z, X), {}};
    out.reports.push_back(check_equation(make_eq("projection forward after inverse",
                                                 compose(out.forward, out.inverse),
                                                 identity(out.forward.dom),
                                                 "rep.projection.right")));
    out.reports.push_back(check_equation(make_eq("projection inverse after forward",
                                                 compose(out.inverse, out.forward),
                                                 identity(out.forward.dom), "rep.projection.left")));
    out.reports.push_back(
        check_rep_mor(GalRepMor{free_rep(X.group, tensor_obj(z, X.carrier)),
                                rep_tensor(free_rep(X.group, z), X), out.forward}));
    return out;
}

/* Fusion operator pi (x) x (x) pi (x) y -> pi (x) x (x) pi (x) y multiplying
   a fresh copy of the group into the inner factor. */
struct FinFusionCheck {
    FinMap forward;
    FinMap inverse;
    std::vector<Report> reports;
};

inline FinMap fusion_forward(const FinGroupObj& g, const FinObj& x, const FinObj& y)
{
    const FinObj px = tensor_obj(g.carrier, x);
    return compose(tensor_map(tensor_map(identity(px), g.mul), identity(y)),
                   colax_pair(g, x, tensor_obj(g.carrier, y)));
}

inline FinMap fusion_inverse(const FinGroupObj& g, const FinObj& x, const FinObj& y)
{
    const FinObj px = tensor_obj(g.carrier, x);
    const FinObj py = tensor_obj(g.carrier, y);
    return compose(tensor_map(tensor_map(identity(px), g.mul), identity(y)),
                   tensor_map(tensor_map(identity(px), g.inv), identity(py)),
                   colax_pair(g, x, py));
}

inline FinFusionCheck fusion_check(const FinGroupObj& g, const FinObj& x, const FinObj& y)
{
    FinFusionCheck out{fusion_forward(g, x, y), fusion_inverse(g, x, y), {}};
    out.reports.push_back(check_equation(make_eq("fusion forward after inverse",
                                                 compose(out.forward, out.inverse),
                                                 identity(out.forward.dom), "rep.fusion.right")));
    out.reports.push_back(check_equation(make_eq("fusion inverse after forward",
                                                 compose(out.inverse, out.forward),
                                                 identity(out.forward.dom), "rep.fusion.left")));
    return out;
}

/* Deterministic probe list: unit, a trivial action, the regular action, its
   tensor square, and the orbit quotient of the square. */
inline std::vector<GalRep> probe_reps(const FinGroupObj& g)
{
    const GalRep reg = free_rep(g, fin_kappa());
    const GalRep square = rep_tensor(reg, reg);
    return {rep_unit(g), trivial_rep(g, fin_obj(2)), reg, square,
            trivial_rep(g, coinvariants(square).obj)};
}

}
