#pragma once

#include "gal_rep.hpp"

/* Recovering a group from its category of actions.  The carrier and every
   structure map of the recovered group come out of the free-forget adjunction
   composites; the model tables enter only through the final comparisons. */

namespace kosmos {

/* Collapse of the free-forget composite onto tensoring with its value at the
   unit object: counit leg after the colax structure at (kappa, x). */
inline FinMap reflection_hatar(const FinGroupObj& g, const FinObj& x)
{
    const FinObj p = g.carrier;
    return compose(tensor_map(identity(tensor_obj(p, fin_kappa())), drop_action(g, x)),
                   colax_pair(g, fin_kappa(), x),
                   tensor_map(identity(p), coherence(Coherence::LeftUnit, x)));
}

inline Report hatar_natural(const FinGroupObj& g, const FinMap& f)
{
    const FinObj pk = tensor_obj(g.carrier, fin_kappa());
    return check_equation(make_eq(
        "reflection naturality",
        compose(reflection_hatar(g, f.cod), tensor_map(identity(g.carrier), f)),
        compose(tensor_map(identity(pk), f), reflection_hatar(g, f.dom)), "reconstruct.hatar"));
}

/* Free image of an action map, the form whose invertibility carries the
   antipode: (I (x) action) . (comul (x) I). */
inline FinMap free_image(const FinGroupObj& g, const GalRep& X)
{
    return compose(tensor_map(identity(g.carrier), X.action),
                   tensor_map(comul_map(g), identity(X.carrier)));
}

/* Action through the inverse element, recovered without reading g.inv: the
   counit after the inverted free image, along the reflection. */
inline FinMap inverse_action(const FinGroupObj& g, const GalRep& X)
{
    return compose(drop_action(g, X.carrier), certify_iso(free_image(g, X)),
                   reflection_hatar(g, X.carrier));
}

struct FinReconstruction {
    FinGroupObj recovered;
    FinGroupMor witness;  // model -> recovered, induced by the right unitor
    std::vector<Report> reports;
};

inline FinReconstruction reconstruct_galois(const FinGroupObj& g)
{
    const FinObj p = g.carrier;
    const GalRep reg = free_rep(g, fin_kappa());
    const FinObj carrier = tensor_obj(p, fin_kappa());

    // product: counit at the regular object along the inverted reflection;
    // unit: the adjunction unit at kappa; inverse: the checked family there
    const FinMap mul = compose(reg.action, certify_iso(reflection_hatar(g, carrier)));
    const FinMap unit = free_unit(g, fin_kappa());
    const FinMap inv = compose(inverse_action(g, reg),
                               tensor_map(identity(p), free_unit(g, fin_kappa())));

    FinReconstruction out;
    out.recovered = FinGroupObj{carrier, mul, unit.table[0], inv};
    out.witness = FinGroupMor{g, out.recovered, coherence(Coherence::RightUnit, p)};

    for (auto& r : group_axioms(out.recovered))
        out.reports.push_back(std::move(r));
    for (auto& r : check_group_mor(out.witness))
        out.reports.push_back(std::move(r));
    out.reports.push_back(check_equation(make_eq(
        "preserves inversion", compose(out.witness.map, g.inv),
        compose(out.recovered.inv, out.witness.map), "reconstruct.inv")));
    const FinMap winv = certify_iso(out.witness.map);
    out.reports.push_back(check_equation(make_eq(
        "witness inverts exactly", compose(winv, out.witness.map), identity(p),
        "reconstruct.witness")));
    return out;
}

/* Universal element at a probe: the counit transported along the reflection. */
inline FinMap universal_element(const FinGroupObj& g, const GalRep& X)
{
    return compose(X.action, certify_iso(reflection_hatar(g, X.carrier)));
}

struct FinComparison {
    FinGroupObj recovered;
    std::vector<GalRep> images;
    std::vector<Report> reports;
};

inline FinComparison comparison_functor(const FinGroupObj& g, const std::vector<GalRep>& probes)
{
    FinComparison out;
    out.recovered = reconstruct_galois(g).recovered;
    for (const auto& X : probes) {
        GalRep image{out.recovered, X.carrier, universal_element(g, X)};
        for (auto& r : rep_axioms(image))
            out.reports.push_back(std::move(r));
        out.reports.push_back(check_equation(make_eq("transport is the identity assignment",
                                                     image.action, X.action,
                                                     "comparison.transport")));
        out.images.push_back(std::move(image));
    }
    for (std::size_t i = 0; i < probes.size(); ++i)
        for (std::size_t j = 0; j < probes.size(); ++j)
            out.reports.push_back(check_equation(make_eq(
                "tensor compatibility",
                universal_element(g, rep_tensor(probes[i], probes[j])),
                rep_tensor(out.images[i], out.images[j]).action, "comparison.tensor")));
    return out;
}

/* A family of components c (x) x -> x over a probe list, the shape in which
   natural transformations out of the twisted morphism category are handled. */
struct FinNatProbe {
    FinObj c;
    std::vector<FinMap> components;
};

/* Component of the family induced by a function gm: c -> pi. */
inline FinMap aut_component(const FinMap& gm, const GalRep& X)
{
    return compose(X.action, tensor_map(gm, identity(X.carrier)));
}

inline FinNatProbe aut_family(const FinMap& gm, const std::vector<GalRep>& probes)
{
    FinNatProbe out{gm.dom, {}};
    for (const auto& X : probes)
        out.components.push_back(aut_component(gm, X));
    return out;
}

/* Recovery of the function from the component at the regular object. */
inline FinMap aut_recover(const FinGroupObj& g, const FinMap& component, const FinObj& c)
{
    return compose(component, tensor_map(identity(c), free_unit(g, fin_kappa())),
                   coherence(Coherence::RightUnit, c));
}

struct FinAutCheck {
    std::size_t count = 0;  // functions whose families pass every law
    HomGroup hom;
    std::vector<Report> reports;
};

inline FinAutCheck aut_presheaf_check(const FinGroupObj& g, const FinObj& c)
{
    const std::size_t n = g.carrier.size;
    std::size_t total = 1;
    for (std::size_t i = 0; i < c.size; ++i) {
        total *= n;
        if (total > 256)
            throw KosmosError("CarrierTooLarge", std::to_string(n) + "^" +
                                                     std::to_string(c.size) +
                                                     " functions exceed the enumeration limit");
    }

    FinAutCheck out;
    out.hom = hom_group(c, g);
    const std::vector<GalRep> probes = probe_reps(g);
    const GalRep reg = free_rep(g, fin_kappa());

    // generating morphisms between probe shapes
    const GalRep unit_rep = rep_unit(g);
    const GalRep t2 = trivial_rep(g, fin_obj(2));
    const GalRep square = rep_tensor(reg, reg);
    std::vector<GalRepMor> gens;
    gens.push_back(GalRepMor{t2, unit_rep, terminal_map(t2.carrier)});
    gens.push_back(GalRepMor{unit_rep, t2, point(t2.carrier, 0)});
    gens.push_back(GalRepMor{reg, unit_rep, terminal_map(reg.carrier)});
    gens.push_back(
        GalRepMor{square, reg, tensor_map(identity(reg.carrier), terminal_map(reg.carrier))});
    for (const auto& m : gens)
        out.reports.push_back(check_rep_mor(m));

    Report natural{"every function induces a natural family", true, std::nullopt, "aut.natural"};
    Report tensor{"every family is tensor compatible", true, std::nullopt, "aut.tensor"};
    Report unit_cmp{"unit components collapse to the point", true, std::nullopt, "aut.unit"};
    Report round{"every family recovers its function", true, std::nullopt, "aut.roundtrip"};
    Report conv{"composition matches convolution", true, std::nullopt, "aut.convolution"};
    auto fold = [](Report& agg, const Report& r) {
        if (!r.passed && agg.passed) {
            agg.passed = false;
            agg.witness = r.witness;
        }
    };

    for (const auto& gm : out.hom.elements) {
        bool ok = true;
        for (const auto& m : gens) {
            const Report r = check_equation(
                make_eq("naturality square", compose(m.map, aut_component(gm, m.src)),
                        compose(aut_component(gm, m.dst), tensor_map(identity(c), m.map)),
                        "aut.natural"));
            fold(natural, r);
            ok = ok && r.passed;
        }
        for (const auto& X : probes)
            for (const auto& Y : probes) {
                const FinObj x = X.carrier;
                const FinObj y = Y.carrier;
                const FinMap shuffle =
                    compose(tensor_map(tensor_map(identity(c), symmetry(c, x)), identity(y)),
                            tensor_map(diagonal(c), identity(tensor_obj(x, y))));
                const Report r = check_equation(make_eq(
                    "tensor square", aut_component(gm, rep_tensor(X, Y)),
                    compose(tensor_map(aut_component(gm, X), aut_component(gm, Y)),
                            shuffle),
                    "aut.tensor"));
                fold(tensor, r);
                ok = ok && r.passed;
            }
        {
            const Report r = check_equation(
                make_eq("unit component", aut_component(gm, unit_rep),
                        terminal_map(tensor_obj(c, fin_kappa())), "aut.unit"));
            fold(unit_cmp, r);
            ok = ok && r.passed;
        }
        {
            const Report r = check_equation(make_eq(
                "round trip", aut_recover(g, aut_component(gm, reg), c), gm, "aut.roundtrip"));
            fold(round, r);
            ok = ok && r.passed;
        }
        if (ok)
            ++out.count;
    }

    // composing families realizes the convolution group multiplication
    for (std::size_t a = 0; a < out.hom.elements.size(); ++a)
        for (std::size_t b = 0; b < out.hom.elements.size(); ++b) {
            const FinMap& ga = out.hom.elements[a];
            const FinMap& gb = out.hom.elements[b];
            const FinMap& gab =
                out.hom.elements[out.hom.group.mul.table[a * out.hom.elements.size() + b]];
            for (const auto& X : probes) {
                const FinObj x = X.carrier;
                const Report r = check_equation(make_eq(
                    "composite family",
                    compose(aut_component(ga, X),
                            tensor_map(identity(c), aut_component(gb, X)),
                            tensor_map(diagonal(c), identity(x))),
                    aut_component(gab, X), "aut.convolution"));
                fold(conv, r);
            }
        }

    Report cnt{"family count matches the convolution group order",
               out.count == out.hom.elements.size(), std::nullopt, "aut.count"};
    if (!cnt.passed)
        cnt.witness = Witness{out.count, std::to_string(out.count),
                              std::to_string(out.hom.elements.size())};
    out.reports.push_back(std::move(natural));
    out.reports.push_back(std::move(tensor));
    out.reports.push_back(std::move(unit_cmp));
    out.reports.push_back(std::move(round));
    out.reports.push_back(std::move(conv));
    out.reports.push_back(std::move(cnt));
    return out;
}

}  // namespace kosmos
