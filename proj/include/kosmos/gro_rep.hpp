#pragma once

#include <string>
#include <vector>

#include "kosmos/hopf.hpp"
#include "kosmos/lawcheck.hpp"
#include "kosmos/ratvec.hpp"

namespace kosmos {

/* Right coactions x -> x (x) pi of a commutative Hopf algebra, the mirror of
   the finite side: cofree/forget and invariants/trivial adjunctions, the
   projection formula, and the fusion operator, all by exact linear algebra. */

struct GroRep {
    RatHopfObj hopf;
    RatObj carrier;
    RatMap coaction;  // carrier -> carrier (x) pi
};

struct GroRepMor {
    GroRep src;
    GroRep dst;
    RatMap map;
};

inline bool same_hopf(const RatHopfObj& a, const RatHopfObj& b)
{
    return a.carrier.dim == b.carrier.dim && a.mul.matrix == b.mul.matrix &&
           a.unit.matrix == b.unit.matrix && a.comul.matrix == b.comul.matrix &&
           a.counit.matrix == b.counit.matrix && a.antipode.matrix == b.antipode.matrix;
}

/* Monoid structure of the Hopf factor: multiply two copies past the middle
   symmetry, insert the unit, or evaluate the counit. */
inline RatMap lax_pair(const RatHopfObj& h, const RatObj& x, const RatObj& y)
{
    const RatObj& p = h.carrier;
    return compose(tensor_map(identity(tensor_obj(x, y)), h.mul),
                   tensor_map(tensor_map(identity(x), symmetry(p, y)), identity(p)));
}

inline RatMap unit_coaction(const RatHopfObj& h, const RatObj& x)
{
    return compose(tensor_map(identity(x), h.unit), coherence(RatCoherence::RightUnit, x));
}

inline RatMap drop_coaction(const RatHopfObj& h, const RatObj& x)
{
    return compose(coherence(RatCoherence::RightUnit, x), tensor_map(identity(x), h.counit));
}

inline std::vector<Report> rep_axioms(const GroRep& X)
{
    const RatHopfObj& h = X.hopf;
    const RatObj& p = h.carrier;
    const RatObj& x = X.carrier;
    std::vector<Report> out;
    out.push_back(check_equation(make_eq(
        "coaction coassociativity", compose(tensor_map(X.coaction, identity(p)), X.coaction),
        compose(coherence(RatCoherence::Assoc, x, p, p), tensor_map(identity(x), h.comul),
                X.coaction),
        "corep.coassoc")));
    out.push_back(check_equation(make_eq("coaction counit",
                                         compose(drop_coaction(h, x), X.coaction), identity(x),
                                         "corep.counit")));
    return out;
}

inline Report check_rep_mor(const GroRepMor& m)
{
    if (!same_hopf(m.src.hopf, m.dst.hopf))
        throw KosmosError("GroupMismatch", "morphism endpoints live over different Hopf algebras");
    return check_equation(make_eq(
        "equivariance", compose(tensor_map(m.map, identity(m.src.hopf.carrier)), m.src.coaction),
        compose(m.dst.coaction, m.map), "corep.mor"));
}

inline GroRep rep_tensor(const GroRep& X, const GroRep& Y)
{
    if (!same_hopf(X.hopf, Y.hopf))
        throw KosmosError("GroupMismatch", "tensor factors live over different Hopf algebras");
    RatMap coaction = compose(lax_pair(X.hopf, X.carrier, Y.carrier),
                              tensor_map(X.coaction, Y.coaction));
    return GroRep{X.hopf, tensor_obj(X.carrier, Y.carrier), coaction};
}

inline GroRep trivial_rep(const RatHopfObj& h, const RatObj& z)
{
    return GroRep{h, z, unit_coaction(h, z)};
}

inline GroRep rep_unit(const RatHopfObj& h) { return trivial_rep(h, rat_kappa()); }

/* Cofree coaction on v (x) pi by comultiplication into the right factor.  The
   adjunction unit at X is X.coaction; the counit evaluates the counit. */
inline GroRep cofree_rep(const RatHopfObj& h, const RatObj& v)
{
    const RatObj& p = h.carrier;
    RatMap coaction =
        compose(coherence(RatCoherence::Assoc, v, p, p), tensor_map(identity(v), h.comul));
    return GroRep{h, tensor_obj(v, p), coaction};
}

inline RatMap cofree_counit(const RatHopfObj& h, const RatObj& v) { return drop_coaction(h, v); }

inline EqResult invariants(const GroRep& X)
{
    return coreflexive_equalizer(X.coaction, unit_coaction(X.hopf, X.carrier),
                                 drop_coaction(X.hopf, X.carrier));
}

/* Trivial/invariants adjunction: the unit embeds a plain space into the
   invariants of its trivial coaction, the counit includes the invariant
   subspace back as an equivariant map. */
inline RatMap invariants_unit(const RatHopfObj& h, const RatObj& z)
{
    return eq_factor(invariants(trivial_rep(h, z)), identity(z));
}

inline GroRepMor invariants_counit(const GroRep& X)
{
    EqResult e = invariants(X);
    return GroRepMor{trivial_rep(X.hopf, e.obj), X, e.incl};
}

/* Canonical basis of the intertwiner space X -> Y: exact nullspace of the
   equivariance constraint on matrix entries, vectorized row-major. */
inline std::vector<GroRepMor> hom_rep(const GroRep& X, const GroRep& Y)
{
    if (!same_hopf(X.hopf, Y.hopf))
        throw KosmosError("GroupMismatch", "hom endpoints live over different Hopf algebras");
    const std::size_t n = X.hopf.carrier.dim;
    const std::size_t dx = X.carrier.dim, dy = Y.carrier.dim;
    Matrix sys = zero_matrix(dy * n * dx, dy * dx);
    std::size_t row = 0;
    for (std::size_t i2 = 0; i2 < dy; ++i2)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t j = 0; j < dx; ++j, ++row) {
                for (std::size_t i = 0; i < dx; ++i)
                    sys[row][i2 * dx + i] += X.coaction.matrix[i * n + p][j];
                for (std::size_t i1 = 0; i1 < dy; ++i1)
                    sys[row][i1 * dx + j] -= Y.coaction.matrix[i2 * n + p][i1];
            }
    Matrix basis = kernel_columns(sys, dy * dx);
    const std::size_t count = basis.empty() ? 0 : basis[0].size();
    std::vector<GroRepMor> out;
    for (std::size_t c = 0; c < count; ++c) {
        Matrix m = zero_matrix(dy, dx);
        for (std::size_t u = 0; u < dy * dx; ++u)
            m[u / dx][u % dx] = basis[u][c];
        out.push_back(GroRepMor{X, Y, RatMap{X.carrier, Y.carrier, std::move(m)}});
    }
    return out;
}

/* The projection isomorphism x (x) z (x) pi -> x (x) z (x) pi multiplies the
   coaction output into the Hopf factor; its stated inverse routes the output
   through the antipode first. */
struct RatProjectionCheck {
    RatMap forward;
    RatMap inverse;
    std::vector<Report> reports;
};

inline RatMap projection_forward(const GroRep& X, const RatObj& z)
{
    const RatObj zp = tensor_obj(z, X.hopf.carrier);
    return compose(lax_pair(X.hopf, X.carrier, z), tensor_map(X.coaction, identity(zp)));
}

inline RatMap projection_inverse(const GroRep& X, const RatObj& z)
{
    const RatObj zp = tensor_obj(z, X.hopf.carrier);
    return compose(lax_pair(X.hopf, X.carrier, z),
                   tensor_map(tensor_map(identity(X.carrier), X.hopf.antipode), identity(zp)),
                   tensor_map(X.coaction, identity(zp)));
}

inline Report projection_negative_control(const GroRep& X, const RatObj& z)
{
    const RatMap phi = projection_forward(X, z);
    return check_equation(make_eq("projection inverse without antipode", compose(phi, phi),
                                  identity(phi.dom), "corep.projection.control"));
}

inline RatProjectionCheck projection_formula_check(const GroRep& X, const RatObj& z)
{
    RatProjectionCheck out{projection_forward(X, z), projection_inverse(X, z), {}};
    out.reports.push_back(check_equation(make_eq("projection forward after inverse",
                                                 compose(out.forward, out.inverse),
                                                 identity(out.forward.dom),
                                                 "corep.projection.right")));
    out.reports.push_back(check_equation(make_eq(
        "projection inverse after forward", compose(out.inverse, out.forward),
        identity(out.forward.dom), "corep.projection.left")));
    out.reports.push_back(
        check_rep_mor(GroRepMor{rep_tensor(X, cofree_rep(X.hopf, z)),
                                cofree_rep(X.hopf, tensor_obj(X.carrier, z)), out.forward}));
    return out;
}

/* Fusion operator x (x) pi (x) y (x) pi -> x (x) pi (x) y (x) pi
   comultiplying a fresh copy out of the inner factor. */
struct RatFusionCheck {
    RatMap forward;
    RatMap inverse;
    std::vector<Report> reports;
};

inline RatMap fusion_forward(const RatHopfObj& h, const RatObj& x, const RatObj& y)
{
    const RatObj& p = h.carrier;
    return compose(lax_pair(h, tensor_obj(x, p), y),
                   tensor_map(tensor_map(identity(x), h.comul), identity(tensor_obj(y, p))));
}

inline RatMap fusion_inverse(const RatHopfObj& h, const RatObj& x, const RatObj& y)
{
    const RatObj& p = h.carrier;
    const RatObj xp = tensor_obj(x, p);
    const RatObj yp = tensor_obj(y, p);
    return compose(lax_pair(h, xp, y),
                   tensor_map(tensor_map(identity(xp), h.antipode), identity(yp)),
                   tensor_map(tensor_map(identity(x), h.comul), identity(yp)));
}

inline RatFusionCheck fusion_check(const RatHopfObj& h, const RatObj& x, const RatObj& y)
{
    RatFusionCheck out{fusion_forward(h, x, y), fusion_inverse(h, x, y), {}};
    out.reports.push_back(check_equation(make_eq("fusion forward after inverse",
                                                 compose(out.forward, out.inverse),
                                                 identity(out.forward.dom), "corep.fusion.right")));
    out.reports.push_back(check_equation(make_eq("fusion inverse after forward",
                                                 compose(out.inverse, out.forward),
                                                 identity(out.forward.dom), "corep.fusion.left")));
    return out;
}

/* Deterministic probe list mirroring the finite side: unit, a trivial
   coaction, the Hopf algebra over itself, its tensor square, and the
   invariants of the square. */
inline std::vector<GroRep> probe_reps(const RatHopfObj& h)
{
    const GroRep reg = cofree_rep(h, rat_kappa());
    const GroRep square = rep_tensor(reg, reg);
    return {rep_unit(h), trivial_rep(h, rat_obj(2)), reg, square,
            trivial_rep(h, invariants(square).obj)};
}

}
