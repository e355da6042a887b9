#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kosmos/errors.hpp"
#include "kosmos/lawcheck.hpp"
#include "kosmos/ratvec.hpp"

namespace kosmos {

/* A commutative Hopf algebra on an exact rational carrier.  Morphisms of the
   dual geometric objects are stored in the algebra direction throughout. */

struct RatHopfObj {
    RatObj carrier;
    RatMap mul;       // carrier (x) carrier -> carrier
    RatMap unit;      // kappa -> carrier
    RatMap comul;     // carrier -> carrier (x) carrier
    RatMap counit;    // carrier -> kappa
    RatMap antipode;  // carrier -> carrier
};

struct CommAlgObj {
    RatObj carrier;
    RatMap mul;
    RatMap unit;
};

inline CommAlgObj alg_of(const RatHopfObj& h) { return CommAlgObj{h.carrier, h.mul, h.unit}; }

inline CommAlgObj kappa_alg()
{
    const RatObj k = rat_kappa();
    return CommAlgObj{k, RatMap{tensor_obj(k, k), k, {{Rat(1)}}}, RatMap{k, k, {{Rat(1)}}}};
}

inline std::vector<Report> comm_alg_axioms(const CommAlgObj& a)
{
    const RatObj& b = a.carrier;
    const RatMap id = identity(b);
    std::vector<Report> reps;
    reps.push_back(check_equation(make_eq(
        "associativity", compose(a.mul, tensor_map(a.mul, id)),
        compose(a.mul, tensor_map(id, a.mul), coherence(RatCoherence::Assoc, b, b, b)),
        "alg.assoc")));
    reps.push_back(check_equation(make_eq(
        "commutativity", compose(a.mul, symmetry(b, b)), a.mul, "alg.comm")));
    reps.push_back(check_equation(make_eq(
        "left unit", compose(a.mul, tensor_map(a.unit, id), coherence(RatCoherence::LeftUnit, b)),
        id, "alg.unit-left")));
    reps.push_back(check_equation(make_eq(
        "right unit", compose(a.mul, tensor_map(id, a.unit), coherence(RatCoherence::RightUnit, b)),
        id, "alg.unit-right")));
    return reps;
}

inline std::vector<Report> hopf_axioms(const RatHopfObj& h)
{
    const RatObj& p = h.carrier;
    const RatMap id = identity(p);
    const RatMap ue = compose(h.unit, h.counit);
    std::vector<Report> reps = comm_alg_axioms(alg_of(h));
    reps.push_back(check_equation(make_eq(
        "coassociativity", compose(tensor_map(h.comul, id), h.comul),
        compose(coherence(RatCoherence::Assoc, p, p, p), tensor_map(id, h.comul), h.comul),
        "hopf.coassoc")));
    reps.push_back(check_equation(make_eq(
        "left counit", compose(coherence(RatCoherence::LeftUnit, p), tensor_map(h.counit, id), h.comul),
        id, "hopf.counit-left")));
    reps.push_back(check_equation(make_eq(
        "right counit", compose(coherence(RatCoherence::RightUnit, p), tensor_map(id, h.counit), h.comul),
        id, "hopf.counit-right")));
    reps.push_back(check_equation(make_eq(
        "comul after mul",
        compose(h.comul, h.mul),
        compose(tensor_map(h.mul, h.mul),
                tensor_map(tensor_map(id, symmetry(p, p)), id),
                tensor_map(h.comul, h.comul)),
        "hopf.bimonoid-mul")));
    reps.push_back(check_equation(make_eq(
        "counit after mul", compose(h.counit, h.mul),
        compose(kappa_alg().mul, tensor_map(h.counit, h.counit)), "hopf.bimonoid-counit")));
    reps.push_back(check_equation(make_eq(
        "comul after unit", compose(h.comul, h.unit), tensor_map(h.unit, h.unit),
        "hopf.bimonoid-unit")));
    reps.push_back(check_equation(make_eq(
        "counit after unit", compose(h.counit, h.unit), identity(rat_kappa()),
        "hopf.bimonoid-scalar")));
    reps.push_back(check_equation(make_eq(
        "left antipode", compose(h.mul, tensor_map(h.antipode, id), h.comul), ue,
        "hopf.antipode-left")));
    reps.push_back(check_equation(make_eq(
        "right antipode", compose(h.mul, tensor_map(id, h.antipode), h.comul), ue,
        "hopf.antipode-right")));
    return reps;
}

struct HopfValidation {
    std::vector<Report> reports;
    std::optional<RatHopfObj> object;
};

inline RatHopfObj assemble_hopf(std::size_t dim, Matrix mul, Matrix unit, Matrix comul,
                                Matrix counit, Matrix antipode, std::vector<std::string> labels = {})
{
    if (dim == 0)
        throw shape_mismatch("assemble_hopf: carrier must have dimension >= 1");
    if (!labels.empty() && labels.size() != dim)
        throw shape_mismatch("assemble_hopf: label count != dimension");
    RatHopfObj h;
    h.carrier = RatObj{dim, std::move(labels)};
    const RatObj sq = tensor_obj(h.carrier, h.carrier);
    const RatObj k = rat_kappa();
    h.mul = RatMap{sq, h.carrier, std::move(mul)};
    h.unit = RatMap{k, h.carrier, std::move(unit)};
    h.comul = RatMap{h.carrier, sq, std::move(comul)};
    h.counit = RatMap{h.carrier, k, std::move(counit)};
    h.antipode = RatMap{h.carrier, h.carrier, std::move(antipode)};
    check_map(h.mul, "assemble_hopf: mul");
    check_map(h.unit, "assemble_hopf: unit");
    check_map(h.comul, "assemble_hopf: comul");
    check_map(h.counit, "assemble_hopf: counit");
    check_map(h.antipode, "assemble_hopf: antipode");
    return h;
}

inline HopfValidation validate_hopf(std::size_t dim, Matrix mul, Matrix unit, Matrix comul,
                                    Matrix counit, Matrix antipode,
                                    std::vector<std::string> labels = {})
{
    RatHopfObj h = assemble_hopf(dim, std::move(mul), std::move(unit), std::move(comul),
                                 std::move(counit), std::move(antipode), std::move(labels));
    HopfValidation res{hopf_axioms(h), std::nullopt};
    if (all_passed(res.reports))
        res.object = std::move(h);
    return res;
}

struct CommAlgValidation {
    std::vector<Report> reports;
    std::optional<CommAlgObj> object;
};

inline CommAlgValidation validate_comm_alg(std::size_t dim, Matrix mul, Matrix unit,
                                           std::vector<std::string> labels = {})
{
    if (dim == 0)
        throw shape_mismatch("validate_comm_alg: carrier must have dimension >= 1");
    if (!labels.empty() && labels.size() != dim)
        throw shape_mismatch("validate_comm_alg: label count != dimension");
    CommAlgObj a;
    a.carrier = RatObj{dim, std::move(labels)};
    a.mul = RatMap{tensor_obj(a.carrier, a.carrier), a.carrier, std::move(mul)};
    a.unit = RatMap{rat_kappa(), a.carrier, std::move(unit)};
    check_map(a.mul, "validate_comm_alg: mul");
    check_map(a.unit, "validate_comm_alg: unit");
    CommAlgValidation res{comm_alg_axioms(a), std::nullopt};
    if (all_passed(res.reports))
        res.object = std::move(a);
    return res;
}

/* Convolution of linear maps out of a Hopf algebra into an algebra. */
inline RatMap convolution(const RatMap& f, const RatMap& g, const RatHopfObj& src,
                          const CommAlgObj& dst)
{
    if (!same_obj(f.dom, src.carrier) || !same_obj(g.dom, src.carrier) ||
        !same_obj(f.cod, dst.carrier) || !same_obj(g.cod, dst.carrier))
        throw shape_mismatch("convolution: maps must go from the Hopf algebra to the algebra");
    return compose(dst.mul, tensor_map(f, g), src.comul);
}

inline RatMap convolution_unit(const RatHopfObj& src, const CommAlgObj& dst)
{
    return compose(dst.unit, src.counit);
}

inline RatMap convolution_inverse(const RatMap& f, const RatHopfObj& src)
{
    return compose(f, src.antipode);
}

inline std::vector<Report> check_alg_mor(const RatMap& f, const CommAlgObj& src,
                                         const CommAlgObj& dst)
{
    std::vector<Report> reps;
    reps.push_back(check_equation(make_eq(
        "preserves multiplication", compose(f, src.mul), compose(dst.mul, tensor_map(f, f)),
        "algmor.mul")));
    reps.push_back(check_equation(make_eq(
        "preserves unit", compose(f, src.unit), dst.unit, "algmor.unit")));
    return reps;
}

/* A morphism of the dual geometric objects src -> dst is the Hopf algebra map
   dst.carrier -> src.carrier. */

struct AffMor {
    RatHopfObj src, dst;
    RatMap alg;  // dst.carrier -> src.carrier
};

inline std::vector<Report> check_aff_mor(const AffMor& f)
{
    std::vector<Report> reps = check_alg_mor(f.alg, alg_of(f.dst), alg_of(f.src));
    reps.push_back(check_equation(make_eq(
        "preserves comultiplication", compose(f.src.comul, f.alg),
        compose(tensor_map(f.alg, f.alg), f.dst.comul), "affmor.comul")));
    reps.push_back(check_equation(make_eq(
        "preserves counit", compose(f.src.counit, f.alg), f.dst.counit, "affmor.counit")));
    return reps;
}

inline AffMor identity_mor(const RatHopfObj& h)
{
    return AffMor{h, h, identity(h.carrier)};
}

inline AffMor compose_mor(const AffMor& f, const AffMor& g)
{
    // geometric composite f . g; algebra maps compose the other way around
    return AffMor{g.src, f.dst, compose(g.alg, f.alg)};
}

/* Conjugation by a point theta (an algebra map to the scalars), written as the
   composite dual to the finite set one: unitors . (theta (x) id (x) theta)
   . (comul (x) antipode) . comul. */
inline AffMor inner_auto(const RatHopfObj& pi, const RatMap& theta)
{
    if (!same_obj(theta.dom, pi.carrier) || theta.cod.dim != 1)
        throw shape_mismatch("inner_auto: theta must be a row on the carrier");
    if (!all_passed(check_alg_mor(theta, alg_of(pi), kappa_alg())))
        throw KosmosError("InvalidPoint", "theta is not an algebra morphism to the scalars");
    const RatObj& p = pi.carrier;
    RatMap sigma =
        compose(coherence(RatCoherence::RightUnit, p),
                tensor_map(coherence(RatCoherence::LeftUnit, p), identity(rat_kappa())),
                tensor_map(tensor_map(theta, identity(p)), theta),
                tensor_map(pi.comul, pi.antipode), pi.comul);
    return AffMor{pi, pi, std::move(sigma)};
}

struct RatTwoCell {
    RatMap theta;  // algebra map f1.dst.carrier -> kappa
    AffMor f1, f2;
};

inline Report check_two_cell(const RatTwoCell& t)
{
    if (!same_obj(t.f1.src.carrier, t.f2.src.carrier) ||
        !same_obj(t.f1.dst.carrier, t.f2.dst.carrier))
        throw shape_mismatch("check_two_cell: 1-cells are not parallel");
    const RatHopfObj& pi = t.f1.dst;
    const RatHopfObj& pip = t.f1.src;
    const RatMap th = compose(pip.unit, t.theta);
    Report rep = check_equation(make_eq("two-cell intertwining",
                                        convolution(th, t.f1.alg, pi, alg_of(pip)),
                                        convolution(t.f2.alg, th, pi, alg_of(pip)),
                                        "twocell.star"));
    if (!rep.passed)
        return rep;
    return check_equation(make_eq("two-cell conjugation form",
                                  compose(t.f1.alg, inner_auto(pi, t.theta).alg), t.f2.alg,
                                  "twocell.sigma"));
}

inline RatTwoCell compose_two_cells(const RatTwoCell& t1, const RatTwoCell& t2)
{
    // vertical: t1: f1 => f2, t2: f2 => f3
    if (!equals(t1.f2.alg, t2.f1.alg))
        throw KosmosError("NotComposable", "middle 1-cells disagree");
    const RatHopfObj& pi = t1.f1.dst;
    return RatTwoCell{convolution(t2.theta, t1.theta, pi, kappa_alg()), t1.f1, t2.f2};
}

inline RatTwoCell horizontal_compose(const RatTwoCell& t, const RatTwoCell& tp)
{
    // t: f1 => f2 out of Spec of pi', tp: f1' => f2' into it
    if (!same_obj(t.f1.src.carrier, tp.f1.dst.carrier))
        throw KosmosError("NotComposable", "2-cells are not horizontally adjacent");
    const RatHopfObj& pi = t.f1.dst;
    const RatMap left = convolution(t.theta, compose(tp.theta, t.f1.alg), pi, kappa_alg());
    const RatMap right = convolution(compose(tp.theta, t.f2.alg), t.theta, pi, kappa_alg());
    if (!equals(left, right))
        throw KosmosError("NotComposable", "the two horizontal composite formulas disagree");
    return RatTwoCell{left, compose_mor(t.f1, tp.f1), compose_mor(t.f2, tp.f2)};
}

}
