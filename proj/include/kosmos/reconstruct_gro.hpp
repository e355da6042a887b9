#pragma once

#include "gro_rep.hpp"

/* Recovering a commutative Hopf algebra from its category of coactions, the
   exact mirror of the finite set side: the carrier and all five structure
   matrices come out of the forget-cofree adjunction composites. */

namespace kosmos {

/* Collapse dual to the reflection: x (x) omega omega_*(kappa) ->
   omega omega_*(x), unit leg before the lax structure at (x, kappa). */
inline RatMap coreflection_tahar(const RatHopfObj& h, const RatObj& x)
{
    const RatObj p = h.carrier;
    return compose(tensor_map(coherence(RatCoherence::RightUnit, x), identity(p)),
                   lax_pair(h, x, rat_kappa()),
                   tensor_map(unit_coaction(h, x), identity(tensor_obj(rat_kappa(), p))));
}

inline Report tahar_natural(const RatHopfObj& h, const RatMap& f)
{
    const RatObj kp = tensor_obj(rat_kappa(), h.carrier);
    return check_equation(make_eq(
        "coreflection naturality",
        compose(coreflection_tahar(h, f.cod), tensor_map(f, identity(kp))),
        compose(tensor_map(f, identity(h.carrier)), coreflection_tahar(h, f.dom)),
        "reconstruct.tahar"));
}

/* Cofree image of a coaction map, the form whose invertibility carries the
   antipode: (I (x) mul) . (coaction (x) I). */
inline RatMap cofree_image(const RatHopfObj& h, const GroRep& X)
{
    return compose(tensor_map(identity(X.carrier), h.mul),
                   tensor_map(X.coaction, identity(h.carrier)));
}

/* Coaction through the antipode, recovered without reading h.antipode: the
   inverted cofree image after the unit insertion. */
inline RatMap inverse_coaction(const RatHopfObj& h, const GroRep& X)
{
    return compose(certify_iso(cofree_image(h, X)),
                   tensor_map(identity(X.carrier), h.unit),
                   coherence(RatCoherence::RightUnit, X.carrier));
}

struct RatReconstruction {
    RatHopfObj recovered;
    AffMor witness;  // geometric recovered -> model; the algebra map is the left unitor
    std::vector<Report> reports;
};

inline RatReconstruction reconstruct_grothendieck(const RatHopfObj& h)
{
    const RatObj p = h.carrier;
    const GroRep reg = cofree_rep(h, rat_kappa());
    const RatObj carrier = tensor_obj(rat_kappa(), p);

    // the lax structure makes the carrier an algebra; comultiplication,
    // counit, antipode come from the adjunction
    const RatMap mul =
        compose(tensor_map(coherence(RatCoherence::RightUnit, rat_kappa()), identity(p)),
                lax_pair(h, rat_kappa(), rat_kappa()));
    const RatMap unit = unit_coaction(h, rat_kappa());
    const RatMap comul = compose(certify_iso(coreflection_tahar(h, carrier)), reg.coaction);
    const RatMap counit = drop_coaction(h, rat_kappa());
    const RatMap antipode =
        compose(tensor_map(tensor_map(identity(rat_kappa()), h.counit), identity(p)),
                inverse_coaction(h, reg));

    RatReconstruction out;
    out.recovered = RatHopfObj{carrier, mul, unit, comul, counit, antipode};
    out.witness = AffMor{out.recovered, h, coherence(RatCoherence::LeftUnit, p)};

    for (auto& r : hopf_axioms(out.recovered))
        out.reports.push_back(std::move(r));
    for (auto& r : check_aff_mor(out.witness))
        out.reports.push_back(std::move(r));
    out.reports.push_back(check_equation(make_eq(
        "preserves antipode", compose(out.witness.alg, h.antipode),
        compose(out.recovered.antipode, out.witness.alg), "reconstruct.antipode")));
    const RatMap winv = certify_iso(out.witness.alg);
    out.reports.push_back(check_equation(make_eq(
        "witness inverts exactly", compose(winv, out.witness.alg), identity(p),
        "reconstruct.witness")));
    return out;
}

/* Universal element at a probe: the coaction transported along the inverted
   coreflection. */
inline RatMap universal_element(const RatHopfObj& h, const GroRep& X)
{
    return compose(certify_iso(coreflection_tahar(h, X.carrier)), X.coaction);
}

struct RatComparison {
    RatHopfObj recovered;
    std::vector<GroRep> images;
    std::vector<Report> reports;
};

inline RatComparison comparison_functor(const RatHopfObj& h, const std::vector<GroRep>& probes)
{
    const std::size_t n = h.carrier.dim;
    RatComparison out;
    out.recovered = reconstruct_grothendieck(h).recovered;
    for (const auto& X : probes) {
        GroRep image{out.recovered, X.carrier, universal_element(h, X)};
        for (auto& r : rep_axioms(image))
            out.reports.push_back(std::move(r));
        out.reports.push_back(check_equation(make_eq("transport is the identity assignment",
                                                     image.coaction, X.coaction,
                                                     "comparison.transport")));
        out.images.push_back(std::move(image));
    }
    // pairs are bounded: the lax middle factor is dense of side dx dy n^2
    for (std::size_t i = 0; i < probes.size(); ++i)
        for (std::size_t j = 0; j < probes.size(); ++j) {
            if (probes[i].carrier.dim * probes[j].carrier.dim * n * n > 800)
                continue;
            out.reports.push_back(check_equation(make_eq(
                "tensor compatibility",
                universal_element(h, rep_tensor(probes[i], probes[j])),
                rep_tensor(out.images[i], out.images[j]).coaction, "comparison.tensor")));
        }
    return out;
}

/* A family of components x -> x (x) b over a probe list. */
struct RatNatProbe {
    RatObj b;
    std::vector<RatMap> components;
};

/* Component of the family induced by an algebra map gm: pi -> b. */
inline RatMap aut_component(const RatMap& gm, const GroRep& X)
{
    return compose(tensor_map(identity(X.carrier), gm), X.coaction);
}

inline RatNatProbe aut_family(const RatMap& gm, const std::vector<GroRep>& probes)
{
    RatNatProbe out{gm.cod, {}};
    for (const auto& X : probes)
        out.components.push_back(aut_component(gm, X));
    return out;
}

/* Recovery of the algebra map from the component at the cofree object. */
inline RatMap aut_recover(const RatHopfObj& h, const RatMap& component, const RatObj& b)
{
    return compose(tensor_map(h.counit, identity(b)), component);
}

struct RatAutCheck {
    std::size_t count = 0;  // supplied maps whose families pass every law
    std::vector<Report> reports;
};

/* Dual presheaf check over explicitly supplied algebra maps pi -> b. */
inline RatAutCheck aut_presheaf_check(const RatHopfObj& h, const CommAlgObj& b,
                                      const std::vector<RatMap>& maps)
{
    const std::size_t n = h.carrier.dim;
    RatAutCheck out;
    const std::vector<GroRep> probes = probe_reps(h);
    const GroRep reg = cofree_rep(h, rat_kappa());

    // generating morphisms between probe shapes
    const GroRep unit_rep = rep_unit(h);
    const GroRep t2 = trivial_rep(h, rat_obj(2));
    const RatMap ones{reg.carrier, rat_kappa(), Matrix(1, std::vector<Rat>(n, 1))};
    std::vector<GroRepMor> gens;
    gens.push_back(GroRepMor{t2, unit_rep, RatMap{t2.carrier, rat_kappa(), {{1, 0}}}});
    gens.push_back(GroRepMor{unit_rep, t2, RatMap{rat_kappa(), t2.carrier, {{1}, {0}}}});
    gens.push_back(GroRepMor{reg, unit_rep, ones});
    for (const auto& m : gens)
        out.reports.push_back(check_rep_mor(m));

    Report premise{"every supplied map is an algebra morphism", true, std::nullopt, "aut.algebra"};
    Report natural{"every map induces a natural family", true, std::nullopt, "aut.natural"};
    Report tensor{"every family is tensor compatible", true, std::nullopt, "aut.tensor"};
    Report unit_cmp{"unit components collapse to the unit", true, std::nullopt, "aut.unit"};
    Report round{"every family recovers its map", true, std::nullopt, "aut.roundtrip"};
    Report conv{"composition matches convolution", true, std::nullopt, "aut.convolution"};
    auto fold = [](Report& agg, const Report& r) {
        if (!r.passed && agg.passed) {
            agg.passed = false;
            agg.witness = r.witness;
        }
    };

    for (const auto& gm : maps) {
        bool ok = true;
        for (const auto& r : check_alg_mor(gm, alg_of(h), b)) {
            fold(premise, r);
            ok = ok && r.passed;
        }
        for (const auto& m : gens) {
            const Report r = check_equation(make_eq(
                "naturality square",
                compose(tensor_map(m.map, identity(b.carrier)), aut_component(gm, m.src)),
                compose(aut_component(gm, m.dst), m.map), "aut.natural"));
            fold(natural, r);
            ok = ok && r.passed;
        }
        for (const auto& X : probes)
            for (const auto& Y : probes) {
                const RatObj x = X.carrier;
                const RatObj y = Y.carrier;
                if (x.dim * y.dim * n * n > 1300)
                    continue;
                const RatMap shuffle = compose(
                    tensor_map(identity(tensor_obj(x, y)), b.mul),
                    tensor_map(tensor_map(identity(x), symmetry(b.carrier, y)),
                               identity(b.carrier)));
                const Report r = check_equation(make_eq(
                    "tensor square", aut_component(gm, rep_tensor(X, Y)),
                    compose(shuffle, tensor_map(aut_component(gm, X), aut_component(gm, Y))),
                    "aut.tensor"));
                fold(tensor, r);
                ok = ok && r.passed;
            }
        {
            const Report r = check_equation(
                make_eq("unit component", aut_component(gm, unit_rep),
                        compose(tensor_map(identity(rat_kappa()), b.unit),
                                coherence(RatCoherence::RightUnit, rat_kappa())),
                        "aut.unit"));
            fold(unit_cmp, r);
            ok = ok && r.passed;
        }
        {
            const Report r = check_equation(
                make_eq("round trip", aut_recover(h, aut_component(gm, reg), b.carrier), gm,
                        "aut.roundtrip"));
            fold(round, r);
            ok = ok && r.passed;
        }
        if (ok)
            ++out.count;
    }

    // composing families realizes convolution of the supplied maps
    for (const auto& ga : maps)
        for (const auto& gb : maps) {
            const RatMap gab = convolution(ga, gb, h, b);
            for (const auto& X : probes) {
                const RatObj x = X.carrier;
                const Report r = check_equation(
                    make_eq("composite family",
                            compose(tensor_map(identity(x), b.mul),
                                    tensor_map(aut_component(ga, X), identity(b.carrier)),
                                    aut_component(gb, X)),
                            aut_component(gab, X), "aut.convolution"));
                fold(conv, r);
            }
        }

    out.reports.push_back(std::move(premise));
    out.reports.push_back(std::move(natural));
    out.reports.push_back(std::move(tensor));
    out.reports.push_back(std::move(unit_cmp));
    out.reports.push_back(std::move(round));
    out.reports.push_back(std::move(conv));
    return out;
}

}  // namespace kosmos
