#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kosmos/errors.hpp"
#include "kosmos/finset.hpp"
#include "kosmos/gal_rep.hpp"
#include "kosmos/group.hpp"
#include "kosmos/lawcheck.hpp"

namespace kosmos {

/* Right torsors p (x) pi -> p over the point: the translation map tau must be
   invertible, which yields a division map and, further on, the twisted group
   pi^p acting on p from the left, the twisted fiber functor it represents,
   and the round trip recovering the torsor from that functor. */

struct GalTorsor {
    FinGroupObj group;
    FinObj carrier;
    FinMap action;   // carrier (x) pi -> carrier
    FinMap tau;      // carrier (x) pi -> carrier (x) carrier
    FinMap tau_inv;  // certified inverse of tau
    FinMap div;      // carrier (x) carrier -> pi
    std::vector<Report> reports;
};

/* Forget a tensor factor against the terminal map. */
inline FinMap drop_left(const FinObj& p, const FinObj& x)
{
    return compose(coherence(Coherence::LeftUnit, x), tensor_map(terminal_map(p), identity(x)));
}

inline FinMap drop_right(const FinObj& x, const FinObj& p)
{
    return compose(coherence(Coherence::RightUnit, x), tensor_map(identity(x), terminal_map(p)));
}

/* Duplicate the left factor past the middle symmetry, as colax_pair does for
   group carriers but for a bare object. */
inline FinMap copy_past_middle(const FinObj& p, const FinObj& x, const FinObj& y)
{
    return compose(tensor_map(tensor_map(identity(p), symmetry(p, x)), identity(y)),
                   tensor_map(diagonal(p), identity(tensor_obj(x, y))));
}

/* tau = (I_p (x) action) . (diag_p (x) I_pi), the measure of how freely pi
   translates p. */
inline FinMap torsor_tau(const FinObj& p, const FinMap& action, const FinGroupObj& pi)
{
    return compose(tensor_map(identity(p), action), tensor_map(diagonal(p), identity(pi.carrier)));
}

/* Check the right action laws, certify tau, derive division, and record the
   identities the translation structure satisfies.  Throws ActionLaw if the
   action laws fail and TauNotIso if tau is not bijective. */
inline GalTorsor validate_right_torsor(const FinObj& p, const FinMap& action, const FinGroupObj& pi)
{
    const FinObj& g = pi.carrier;
    if (p.size == 0)
        throw shape_mismatch("validate_right_torsor: empty carrier");
    if (action.dom.size != tensor_obj(p, g).size || action.cod.size != p.size)
        throw shape_mismatch("validate_right_torsor: action shape");

    GalTorsor t;
    t.group = pi;
    t.carrier = p;
    t.action = action;

    Report assoc = check_equation(make_eq(
        "action associativity", compose(action, tensor_map(action, identity(g))),
        compose(action, tensor_map(identity(p), pi.mul), coherence(Coherence::Assoc, p, g, g)),
        "torsor.action"));
    Report unit = check_equation(make_eq(
        "action unit",
        compose(action, tensor_map(identity(p), unit_map(pi)), coherence(Coherence::RightUnit, p)),
        identity(p), "torsor.action"));
    if (!assoc.passed)
        throw KosmosError("ActionLaw", detail::witness_detail(assoc));
    if (!unit.passed)
        throw KosmosError("ActionLaw", detail::witness_detail(unit));
    t.reports.push_back(assoc);
    t.reports.push_back(unit);

    t.tau = torsor_tau(p, action, pi);
    try {
        t.tau_inv = certify_iso(t.tau);
    } catch (const KosmosError& e) {
        throw KosmosError("TauNotIso", detail::strip_kind(e));
    }
    t.div = compose(coherence(Coherence::LeftUnit, g), tensor_map(terminal_map(p), identity(g)),
                    t.tau_inv);

    const FinMap& tau = t.tau;
    const FinMap& d = t.div;
    t.reports.push_back(check_equation(make_eq(
        "tau commutes with duplication", compose(tensor_map(diagonal(p), identity(p)), tau),
        compose(tensor_map(identity(p), tau), tensor_map(diagonal(p), identity(g))), "torsor.tau")));
    t.reports.push_back(check_equation(make_eq(
        "tau collapses to the action", compose(drop_left(p, p), tau), action, "torsor.tau")));
    t.reports.push_back(check_equation(make_eq(
        "tau absorbs multiplication", compose(tau, tensor_map(identity(p), pi.mul)),
        compose(tensor_map(identity(p), action), tensor_map(tau, identity(g))), "torsor.tau")));
    t.reports.push_back(check_equation(make_eq(
        "tau at the unit is the diagonal",
        compose(tau, tensor_map(identity(p), unit_map(pi)), coherence(Coherence::RightUnit, p)),
        diagonal(p), "torsor.tau")));

    t.reports.push_back(check_equation(make_eq(
        "division intertwines the action", compose(d, tensor_map(identity(p), action)),
        compose(pi.mul, tensor_map(d, identity(g))), "torsor.div")));
    t.reports.push_back(check_equation(make_eq(
        "division vanishes on the diagonal", compose(d, diagonal(p)),
        compose(unit_map(pi), terminal_map(p)), "torsor.div")));
    t.reports.push_back(check_equation(make_eq(
        "division rebuilds the inverse of tau",
        compose(tensor_map(identity(p), d), tensor_map(diagonal(p), identity(p))), t.tau_inv,
        "torsor.div")));

    FinMap phi = torsor_tau(g, pi.mul, pi);
    t.reports.push_back(check_equation(make_eq(
        "tau braids into a double translation",
        compose(tensor_map(identity(p), tau), tensor_map(tau, identity(g))),
        compose(tensor_map(identity(tensor_obj(p, p)), action),
                tensor_map(tensor_map(identity(p), symmetry(p, p)), identity(g)),
                tensor_map(diagonal(p), identity(tensor_obj(p, g))), tensor_map(tau, identity(g)),
                tensor_map(identity(p), phi)),
        "torsor.antipode")));
    t.reports.push_back(check_equation(make_eq(
        "division flips through inversion", compose(d, symmetry(p, p)), compose(pi.inv, d),
        "torsor.antipode")));
    FinMap gamma = compose(action, symmetry(g, p), tensor_map(pi.inv, identity(p)));
    t.reports.push_back(check_equation(make_eq(
        "division cancels the opposite action",
        compose(tensor_map(identity(p), gamma), tensor_map(t.tau_inv, identity(p)),
                tensor_map(identity(p), diagonal(p))),
        compose(diagonal(p), drop_right(p, p)), "torsor.antipode")));
    return t;
}

/* pi itself translated by its own multiplication. */
inline GalTorsor regular_torsor(const FinGroupObj& pi)
{
    return validate_right_torsor(pi.carrier, pi.mul, pi);
}

/* The induced left action of pi on p through inversion. */
inline FinMap opposite_action(const GalTorsor& t)
{
    const FinObj& g = t.group.carrier;
    return compose(t.action, symmetry(g, t.carrier), tensor_map(t.group.inv, identity(t.carrier)));
}

/* The group of pi-equivariant symmetries of p: classes of p (x) p under
   (a, b) ~ (a.div(b,c), c), with everything induced along the projection. */
struct GalTwist {
    FinGroupObj group;    // the twisted group pi^p
    CoeqResult classes;   // p (x) p ->> its carrier
    FinMap left_action;   // pi^p (x) p -> p
    FinMap phi;           // p (x) p -> p (x) pi^p
    FinMap phi_inv;
    std::vector<Report> reports;
};

inline GalTwist twist_group(const GalTorsor& t)
{
    const FinObj& p = t.carrier;
    FinObj pp = tensor_obj(p, p);

    FinMap forget = compose(coherence(Coherence::RightUnit, pp),
                            tensor_map(identity(pp), terminal_map(p)));
    FinMap rebase = compose(tensor_map(t.action, identity(p)),
                            tensor_map(identity(p), tensor_map(t.div, identity(p))),
                            tensor_map(identity(pp), diagonal(p)));
    FinMap section = tensor_map(identity(p), diagonal(p));

    GalTwist tw;
    tw.classes = reflexive_coequalizer(forget, rebase, section);
    const FinObj& e = tw.classes.obj;
    const FinMap& proj = tw.classes.proj;

    tw.left_action = surjection_factor(
        tensor_map(proj, identity(p)), compose(t.action, tensor_map(identity(p), t.div)),
        "twist_group: left action");

    FinMap mul = surjection_factor(tensor_map(identity(e), proj),
                                   compose(proj, tensor_map(tw.left_action, identity(p))),
                                   "twist_group: multiplication");
    FinMap unit = surjection_factor(terminal_map(p), compose(proj, diagonal(p)),
                                    "twist_group: unit");
    FinMap inv = surjection_factor(proj, compose(proj, symmetry(p, p)), "twist_group: inversion");
    tw.group = FinGroupObj{e, mul, unit.table[0], inv};
    for (Report& r : group_axioms(tw.group))
        tw.reports.push_back(std::move(r));

    tw.reports.push_back(check_equation(make_eq(
        "twisted action associativity",
        compose(tw.left_action, tensor_map(tw.group.mul, identity(p)),
                coherence(Coherence::Assoc, e, e, p)),
        compose(tw.left_action, tensor_map(identity(e), tw.left_action)), "torsor.twist")));
    tw.reports.push_back(check_equation(make_eq(
        "twisted action unit",
        compose(tw.left_action, tensor_map(unit_map(tw.group), identity(p)),
                coherence(Coherence::LeftUnit, p)),
        identity(p), "torsor.twist")));
    tw.reports.push_back(check_equation(make_eq(
        "left and right translations commute",
        compose(tw.left_action, tensor_map(identity(e), t.action)),
        compose(t.action, tensor_map(tw.left_action, identity(t.group.carrier))), "torsor.twist")));

    tw.phi = compose(tensor_map(identity(p), proj), tensor_map(identity(p), symmetry(p, p)),
                     tensor_map(diagonal(p), identity(p)));
    tw.phi_inv = certify_iso(tw.phi);
    tw.reports.push_back(check_equation(make_eq(
        "pairing iso matches its displayed inverse", tw.phi_inv,
        compose(tensor_map(identity(p), tw.left_action), tensor_map(identity(p), symmetry(p, e)),
                tensor_map(diagonal(p), identity(e))),
        "torsor.twist")));
    tw.reports.push_back(check_equation(make_eq(
        "pairing iso is comultiplicative", compose(tensor_map(identity(p), diagonal(e)), tw.phi),
        compose(tensor_map(tw.phi, identity(e)), tensor_map(identity(pp), proj),
                tensor_map(identity(pp), symmetry(p, p)), diagonal(pp)),
        "torsor.twist")));
    return tw;
}

/* Carrier of the twisted fiber functor at X: p (x) x with the two ways of
   letting pi act identified.  The action argument lets the same coequalizer
   serve the opposite torsor, whose group differs from X's own. */
inline CoeqResult twisted_carrier(const FinObj& p, const FinMap& action, const GalRep& x)
{
    const FinObj& g = x.group.carrier;
    FinMap over = tensor_map(identity(p), x.action);
    FinMap under = compose(tensor_map(action, identity(x.carrier)),
                           coherence(Coherence::Assoc, p, g, x.carrier));
    FinMap section = tensor_map(
        identity(p),
        compose(tensor_map(unit_map(x.group), identity(x.carrier)),
                coherence(Coherence::LeftUnit, x.carrier)));
    return reflexive_coequalizer(over, under, section);
}

/* The twisted fiber functor on a finite list of probe representations:
   per-probe carriers, the pairwise monoidal coherences, the unit coherence,
   and the comparison at each probe's underlying trivial representation. */
struct GalTwistedFiber {
    GalTorsor torsor;
    std::vector<GalRep> probes;
    std::vector<CoeqResult> carriers;
    std::vector<std::vector<FinMap>> pair_coherence;  // omega(X(x)Y) -> omega(X)(x)omega(Y)
    FinMap unit_coherence;                            // omega(unit rep) -> kappa
    std::vector<FinMap> trivial_comparison;           // omega(trivial on X's carrier) -> carrier
    std::vector<Report> reports;
};

inline GalTwistedFiber twist_fiber(const GalTorsor& t, const std::vector<GalRep>& probes)
{
    const FinObj& p = t.carrier;
    GalTwistedFiber fib;
    fib.torsor = t;
    fib.probes = probes;
    for (const GalRep& x : probes) {
        if (!same_group(x.group, t.group))
            throw shape_mismatch("twist_fiber: probe over a different group");
        fib.carriers.push_back(twisted_carrier(p, t.action, x));
    }

    fib.pair_coherence.resize(probes.size());
    for (std::size_t i = 0; i < probes.size(); ++i) {
        for (std::size_t j = 0; j < probes.size(); ++j) {
            GalRep xy = rep_tensor(probes[i], probes[j]);
            CoeqResult both = twisted_carrier(p, t.action, xy);
            FinMap split = compose(
                tensor_map(fib.carriers[i].proj, fib.carriers[j].proj),
                copy_past_middle(p, probes[i].carrier, probes[j].carrier));
            FinMap omega = surjection_factor(both.proj, split, "twist_fiber: pair coherence");
            certify_iso(omega);
            std::string tag = " (" + std::to_string(i) + "," + std::to_string(j) + ")";
            fib.reports.push_back(check_equation(make_eq(
                "pair coherence square" + tag, compose(omega, both.proj), split, "torsor.fiber")));
            fib.pair_coherence[i].push_back(std::move(omega));
        }
    }

    CoeqResult unit_cls = twisted_carrier(p, t.action, rep_unit(t.group));
    FinMap collapse = compose(terminal_map(p), coherence(Coherence::RightUnit, p));
    fib.unit_coherence = surjection_factor(unit_cls.proj, collapse, "twist_fiber: unit coherence");
    certify_iso(fib.unit_coherence);
    fib.reports.push_back(check_equation(make_eq(
        "unit coherence square", compose(fib.unit_coherence, unit_cls.proj), collapse,
        "torsor.fiber")));

    for (std::size_t i = 0; i < probes.size(); ++i) {
        const FinObj& z = probes[i].carrier;
        CoeqResult triv = twisted_carrier(p, t.action, trivial_rep(t.group, z));
        FinMap hat = surjection_factor(triv.proj, drop_left(p, z),
                                       "twist_fiber: trivial comparison");
        certify_iso(hat);
        fib.reports.push_back(check_equation(make_eq(
            "trivial comparison square (" + std::to_string(i) + ")", compose(hat, triv.proj),
            drop_left(p, z), "torsor.fiber")));
        fib.trivial_comparison.push_back(std::move(hat));
    }
    return fib;
}

/* Twisting by p and then by the opposite torsor over the twisted group comes
   back to where it started: the components x -> omega-ring(omega(X)) are
   certified isos, natural over any supplied probe morphisms. */
struct GalEquivalenceCheck {
    GalTwist twist;
    std::vector<FinMap> components;  // probe carrier -> round-trip carrier
    std::vector<Report> reports;
};

inline GalEquivalenceCheck twisted_equiv_check(const GalTorsor& t, const std::vector<GalRep>& probes,
                                               const std::vector<GalRepMor>& mors = {})
{
    const FinObj& p = t.carrier;
    GalEquivalenceCheck out;
    out.twist = twist_group(t);
    const GalTwist& tw = out.twist;
    const FinObj& e = tw.group.carrier;
    FinMap ring_action = compose(tw.left_action, symmetry(p, e),
                                 tensor_map(identity(p), tw.group.inv));

    struct Leg {
        CoeqResult forward;
        CoeqResult ring;
        FinMap component;
    };
    auto build = [&](const GalRep& x) {
        Leg leg;
        leg.forward = twisted_carrier(p, t.action, x);
        FinMap breve_action = surjection_factor(
            tensor_map(identity(e), leg.forward.proj),
            compose(leg.forward.proj, tensor_map(tw.left_action, identity(x.carrier))),
            "twisted_equiv_check: twisted action");
        GalRep breve{tw.group, leg.forward.obj, breve_action};
        leg.ring = twisted_carrier(p, ring_action, breve);
        leg.component = surjection_factor(
            drop_left(p, x.carrier),
            compose(leg.ring.proj, tensor_map(identity(p), leg.forward.proj),
                    tensor_map(diagonal(p), identity(x.carrier))),
            "twisted_equiv_check: component");
        return leg;
    };

    std::vector<Leg> legs;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        Leg leg = build(probes[i]);
        std::string tag = " (probe " + std::to_string(i) + ")";
        Report iso{"component is invertible" + tag, true, std::nullopt, "torsor.equivalence"};
        try {
            certify_iso(leg.component);
        } catch (const KosmosError& err) {
            iso.passed = false;
            iso.witness = Witness{0, detail::strip_kind(err), "bijection"};
        }
        out.reports.push_back(std::move(iso));
        out.components.push_back(leg.component);
        legs.push_back(std::move(leg));
    }

    for (std::size_t k = 0; k < mors.size(); ++k) {
        const GalRepMor& m = mors[k];
        std::string tag = " (morphism " + std::to_string(k) + ")";
        Report ok = check_rep_mor(m);
        ok.name += tag;
        out.reports.push_back(ok);
        Leg src = build(m.src);
        Leg dst = build(m.dst);
        FinMap fwd = surjection_factor(
            src.forward.proj, compose(dst.forward.proj, tensor_map(identity(p), m.map)),
            "twisted_equiv_check: transported morphism");
        FinMap ringed = surjection_factor(
            src.ring.proj, compose(dst.ring.proj, tensor_map(identity(p), fwd)),
            "twisted_equiv_check: doubly transported morphism");
        out.reports.push_back(check_equation(make_eq(
            "component naturality" + tag, compose(ringed, src.component),
            compose(dst.component, m.map), "torsor.equivalence")));
    }
    return out;
}

/* A pi-equivariant map of torsor carriers.  Every such map is invertible and
   induces an iso between the twisted fiber functors. */
struct GalTorsorMor {
    GalTorsor src;
    GalTorsor dst;
    FinMap map;  // src carrier -> dst carrier
};

struct GalTorsorNat {
    std::vector<FinMap> components;  // omega_src(X) -> omega_dst(X)
    std::vector<Report> reports;
};

inline GalTorsorNat torsor_iso_to_nat(const GalTorsorMor& f, const std::vector<GalRep>& probes)
{
    if (!same_group(f.src.group, f.dst.group))
        throw shape_mismatch("torsor_iso_to_nat: torsors over different groups");
    const FinObj& g = f.src.group.carrier;
    if (f.map.dom.size != f.src.carrier.size || f.map.cod.size != f.dst.carrier.size)
        throw shape_mismatch("torsor_iso_to_nat: map shape");
    Report equi = check_equation(make_eq(
        "equivariance of the carrier map", compose(f.map, f.src.action),
        compose(f.dst.action, tensor_map(f.map, identity(g))), "torsor.morphism"));
    if (!equi.passed)
        throw KosmosError("NotTorsorMorphism", detail::witness_detail(equi));
    certify_iso(f.map);

    GalTorsorNat out;
    out.reports.push_back(std::move(equi));
    auto component = [&](const GalRep& x, const CoeqResult& src_cls, const CoeqResult& dst_cls) {
        return surjection_factor(
            src_cls.proj, compose(dst_cls.proj, tensor_map(f.map, identity(x.carrier))),
            "torsor_iso_to_nat: component");
    };

    std::vector<CoeqResult> src_cls, dst_cls;
    for (const GalRep& x : probes) {
        src_cls.push_back(twisted_carrier(f.src.carrier, f.src.action, x));
        dst_cls.push_back(twisted_carrier(f.dst.carrier, f.dst.action, x));
    }
    for (std::size_t i = 0; i < probes.size(); ++i) {
        FinMap comp = component(probes[i], src_cls[i], dst_cls[i]);
        certify_iso(comp);
        out.components.push_back(std::move(comp));
    }

    for (std::size_t i = 0; i < probes.size(); ++i) {
        for (std::size_t j = 0; j < probes.size(); ++j) {
            GalRep xy = rep_tensor(probes[i], probes[j]);
            CoeqResult src_pair = twisted_carrier(f.src.carrier, f.src.action, xy);
            CoeqResult dst_pair = twisted_carrier(f.dst.carrier, f.dst.action, xy);
            FinMap comp_pair = component(xy, src_pair, dst_pair);
            FinMap omega_src = surjection_factor(
                src_pair.proj,
                compose(tensor_map(src_cls[i].proj, src_cls[j].proj),
                        copy_past_middle(f.src.carrier, probes[i].carrier, probes[j].carrier)),
                "torsor_iso_to_nat: pair coherence");
            FinMap omega_dst = surjection_factor(
                dst_pair.proj,
                compose(tensor_map(dst_cls[i].proj, dst_cls[j].proj),
                        copy_past_middle(f.dst.carrier, probes[i].carrier, probes[j].carrier)),
                "torsor_iso_to_nat: pair coherence");
            out.reports.push_back(check_equation(make_eq(
                "components respect the pair coherence (" + std::to_string(i) + "," +
                    std::to_string(j) + ")",
                compose(omega_dst, comp_pair),
                compose(tensor_map(out.components[i], out.components[j]), omega_src),
                "torsor.morphism")));
        }
    }
    return out;
}

/* From the twisted fiber functor back to the torsor: the carrier of
   omega^{p*}(free kappa) with the action induced by multiplication is again a
   torsor, and evaluating the action gives an equivariant iso back to p. */
struct GalRoundTrip {
    GalTorsor associated;
    FinMap counit;  // associated carrier -> p
    FinMap counit_inv;
    std::vector<Report> reports;
};

inline GalRoundTrip fib_tors_roundtrip(const FinGroupObj& pi, const GalTorsor& t,
                                       const std::vector<GalRep>& probes)
{
    if (!same_group(pi, t.group))
        throw shape_mismatch("fib_tors_roundtrip: group mismatch");
    const FinObj& p = t.carrier;
    CoeqResult cls = twisted_carrier(p, t.action, free_rep(pi, fin_kappa()));
    FinMap action = surjection_factor(
        tensor_map(cls.proj, identity(pi.carrier)),
        compose(cls.proj, tensor_map(identity(p), pi.mul)), "fib_tors_roundtrip: induced action");

    GalRoundTrip out;
    out.associated = validate_right_torsor(cls.obj, action, pi);
    for (const Report& r : out.associated.reports)
        out.reports.push_back(r);

    out.counit = coeq_factor(
        cls, compose(t.action, coherence(Coherence::RightUnit, tensor_obj(p, pi.carrier))));
    Report equi = check_equation(make_eq(
        "round trip counit is equivariant", compose(out.counit, action),
        compose(t.action, tensor_map(out.counit, identity(pi.carrier))), "torsor.roundtrip"));
    out.reports.push_back(equi);
    if (!equi.passed)
        throw KosmosError("RoundTripFailure", detail::witness_detail(equi));
    try {
        out.counit_inv = certify_iso(out.counit);
    } catch (const KosmosError& e) {
        throw KosmosError("RoundTripFailure", detail::strip_kind(e));
    }

    GalTorsorNat nat = torsor_iso_to_nat(GalTorsorMor{out.associated, t, out.counit}, probes);
    for (Report& r : nat.reports)
        out.reports.push_back(std::move(r));
    return out;
}

}  // namespace kosmos
