#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kosmos/errors.hpp"
#include "kosmos/gro_rep.hpp"
#include "kosmos/hopf.hpp"
#include "kosmos/lawcheck.hpp"
#include "kosmos/rational.hpp"
#include "kosmos/ratvec.hpp"

namespace kosmos {

/* Left cotranslations lambda: p -> pi (x) p of a commutative algebra: the
   cotranslation map tau must be invertible, which yields a division map and,
   further on, the twisted Hopf algebra pi^p coacting on p from the right,
   the twisted fiber functor it corepresents, and the round trip recovering
   the torsor from that functor. */

struct GroTorsor {
    RatHopfObj hopf;
    CommAlgObj algebra;
    RatMap coaction;  // carrier -> pi (x) carrier
    RatMap tau;       // pi (x) carrier -> carrier (x) carrier
    RatMap tau_inv;   // certified inverse of tau
    RatMap div;       // pi -> carrier (x) carrier
    std::vector<Report> reports;
};

/* Insert a tensor factor against the algebra unit. */
inline RatMap insert_left(const CommAlgObj& a, const RatObj& x)
{
    return compose(tensor_map(a.unit, identity(x)), coherence(RatCoherence::LeftUnit, x));
}

inline RatMap insert_right(const RatObj& x, const CommAlgObj& a)
{
    return compose(tensor_map(identity(x), a.unit), coherence(RatCoherence::RightUnit, x));
}

/* Evaluate the counit against the left Hopf factor. */
inline RatMap counit_left(const RatHopfObj& h, const RatObj& x)
{
    return compose(coherence(RatCoherence::LeftUnit, x), tensor_map(h.counit, identity(x)));
}

/* The componentwise algebra structure on a tensor product of commutative
   algebras, multiplying past the middle symmetry. */
inline CommAlgObj tensor_alg(const CommAlgObj& a, const CommAlgObj& b)
{
    CommAlgObj out;
    out.carrier = tensor_obj(a.carrier, b.carrier);
    out.mul = compose(tensor_map(a.mul, b.mul),
                      tensor_map(tensor_map(identity(a.carrier), symmetry(b.carrier, a.carrier)),
                                 identity(b.carrier)));
    out.unit = compose(tensor_map(a.unit, b.unit), coherence(RatCoherence::LeftUnit, rat_kappa()));
    return out;
}

/* Multiply two middle factors past the symmetry, as lax_pair does for Hopf
   carriers but for a bare algebra. */
inline RatMap merge_past_middle(const CommAlgObj& a, const RatObj& x, const RatObj& y)
{
    return compose(tensor_map(identity(tensor_obj(x, y)), a.mul),
                   tensor_map(tensor_map(identity(x), symmetry(a.carrier, y)),
                              identity(a.carrier)));
}

/* tau = (I_pi (x) mul) . (coaction (x) I_p), the measure of how freely pi
   cotranslates p. */
inline RatMap torsor_tau(const CommAlgObj& p, const RatMap& coaction, const RatHopfObj& pi)
{
    return compose(tensor_map(identity(pi.carrier), p.mul),
                   tensor_map(coaction, identity(p.carrier)));
}

/* Check the left coaction laws, certify tau, derive division, and record the
   identities the cotranslation structure satisfies.  Throws ActionLaw if the
   coaction laws fail and TauNotIso if tau is not invertible. */
inline GroTorsor validate_left_torsor(const CommAlgObj& p, const RatMap& coaction,
                                      const RatHopfObj& pi)
{
    const RatObj& b = p.carrier;
    const RatObj& c = pi.carrier;
    if (b.dim == 0)
        throw shape_mismatch("validate_left_torsor: empty carrier");
    check_map(coaction, "validate_left_torsor");
    if (coaction.dom.dim != b.dim || coaction.cod.dim != c.dim * b.dim)
        throw shape_mismatch("validate_left_torsor: coaction shape");

    GroTorsor t;
    t.hopf = pi;
    t.algebra = p;
    t.coaction = coaction;

    CommAlgObj amb = tensor_alg(alg_of(pi), p);
    std::vector<Report> action = {
        check_equation(make_eq("coaction coassociativity",
                               compose(tensor_map(pi.comul, identity(b)), coaction),
                               compose(tensor_map(identity(c), coaction), coaction),
                               "torsor.action")),
        check_equation(make_eq("coaction counit", compose(counit_left(pi, b), coaction),
                               identity(b), "torsor.action")),
        check_equation(make_eq("coaction preserves multiplication", compose(coaction, p.mul),
                               compose(amb.mul, tensor_map(coaction, coaction)),
                               "torsor.action")),
        check_equation(make_eq("coaction preserves unit", compose(coaction, p.unit), amb.unit,
                               "torsor.action")),
    };
    for (const Report& r : action)
        if (!r.passed)
            throw KosmosError("ActionLaw", detail::witness_detail(r));
    for (Report& r : action)
        t.reports.push_back(std::move(r));

    t.tau = torsor_tau(p, coaction, pi);
    try {
        t.tau_inv = certify_iso(t.tau);
    } catch (const KosmosError& e) {
        throw KosmosError("TauNotIso", detail::strip_kind(e));
    }
    t.div = compose(t.tau_inv, insert_right(c, p));

    t.reports.push_back(check_equation(make_eq(
        "tau commutes with multiplication", compose(t.tau, tensor_map(identity(b), p.mul)),
        compose(tensor_map(identity(c), p.mul), tensor_map(t.tau, identity(b))), "torsor.tau")));
    t.reports.push_back(check_equation(make_eq("tau collapses to the coaction",
                                               compose(t.tau, insert_right(b, p)), coaction,
                                               "torsor.tau")));
    t.reports.push_back(check_equation(make_eq(
        "tau absorbs comultiplication", compose(tensor_map(identity(c), t.tau),
                                                tensor_map(coaction, identity(b))),
        compose(tensor_map(pi.comul, identity(b)), t.tau), "torsor.tau")));
    t.reports.push_back(check_equation(make_eq("tau under the counit is multiplication",
                                               compose(counit_left(pi, b), t.tau), p.mul,
                                               "torsor.tau")));

    t.reports.push_back(check_equation(make_eq(
        "division intertwines the coaction",
        compose(tensor_map(coaction, identity(b)), t.div),
        compose(tensor_map(identity(c), t.div), pi.comul), "torsor.div")));
    t.reports.push_back(check_equation(make_eq("division collapses under multiplication",
                                               compose(p.mul, t.div),
                                               compose(p.unit, pi.counit), "torsor.div")));
    t.reports.push_back(check_equation(make_eq(
        "division rebuilds the inverse of tau",
        compose(tensor_map(identity(b), p.mul), tensor_map(t.div, identity(b))), t.tau_inv,
        "torsor.div")));

    RatMap phi = torsor_tau(alg_of(pi), pi.comul, pi);
    t.reports.push_back(check_equation(make_eq(
        "tau braids into a double translation",
        compose(tensor_map(phi, identity(b)), tensor_map(identity(c), t.tau),
                tensor_map(identity(tensor_obj(c, b)), p.mul),
                tensor_map(tensor_map(identity(c), symmetry(b, b)), identity(b)),
                tensor_map(coaction, identity(tensor_obj(b, b)))),
        compose(tensor_map(identity(c), t.tau), tensor_map(t.tau, identity(b))),
        "torsor.antipode")));
    t.reports.push_back(check_equation(make_eq("division flips through the antipode",
                                               compose(symmetry(b, b), t.div),
                                               compose(t.div, pi.antipode), "torsor.antipode")));
    RatMap rho = compose(tensor_map(identity(b), pi.antipode), symmetry(c, b), coaction);
    t.reports.push_back(check_equation(make_eq(
        "division cancels the opposite coaction",
        compose(tensor_map(p.mul, identity(b)), tensor_map(identity(b), t.tau_inv),
                tensor_map(rho, identity(b))),
        compose(insert_left(p, b), p.mul), "torsor.antipode")));
    return t;
}

/* Every Hopf algebra cotranslates itself by its comultiplication. */
inline GroTorsor regular_torsor(const RatHopfObj& pi)
{
    return validate_left_torsor(alg_of(pi), pi.comul, pi);
}

/* The mirrored right coaction b -> b (x) pi through the antipode. */
inline RatMap opposite_coaction(const GroTorsor& t)
{
    const RatObj& b = t.algebra.carrier;
    return compose(tensor_map(identity(b), t.hopf.antipode),
                   symmetry(t.hopf.carrier, b), t.coaction);
}

/* The twisted Hopf algebra pi^p: the subalgebra of p (x) p equalizing the
   free left leg against division-and-cotranslation, carrying the transported
   Hopf structure and coacting on p from the right. */
struct GroTwist {
    RatHopfObj hopf;
    EqResult sub;     // pi^p -> p (x) p
    RatMap coaction;  // p -> p (x) pi^p
    RatMap phi;       // pi^p (x) p -> p (x) p, certified
    RatMap phi_inv;
    std::vector<Report> reports;
};

inline GroTwist twist_group(const GroTorsor& t)
{
    const CommAlgObj& a = t.algebra;
    const RatObj& b = a.carrier;
    const RatObj& c = t.hopf.carrier;
    const RatObj pp = tensor_obj(b, b);

    RatMap extend = insert_left(a, pp);
    RatMap rebase = compose(tensor_map(a.mul, identity(pp)),
                            tensor_map(tensor_map(identity(b), t.div), identity(b)),
                            tensor_map(identity(b), t.coaction));
    RatMap retract = tensor_map(a.mul, identity(b));

    GroTwist tw;
    tw.sub = coreflexive_equalizer(extend, rebase, retract);
    const RatObj& e = tw.sub.obj;
    const RatMap& incl = tw.sub.incl;

    tw.coaction = injection_factor(tensor_map(identity(b), incl),
                                   compose(tensor_map(t.div, identity(b)), t.coaction),
                                   "twist_group: twisted coaction");

    CommAlgObj amb = tensor_alg(a, a);
    RatHopfObj h;
    h.carrier = e;
    h.mul = eq_factor(tw.sub, compose(amb.mul, tensor_map(incl, incl)));
    h.unit = eq_factor(tw.sub, amb.unit);
    h.comul = injection_factor(tensor_map(incl, identity(e)),
                               compose(tensor_map(identity(b), tw.coaction), incl),
                               "twist_group: comultiplication");
    h.counit = injection_factor(a.unit, compose(a.mul, incl), "twist_group: counit");
    h.antipode = eq_factor(tw.sub, compose(symmetry(b, b), incl));
    tw.hopf = h;

    for (Report& r : hopf_axioms(tw.hopf))
        tw.reports.push_back(std::move(r));

    tw.reports.push_back(check_equation(make_eq(
        "twisted coaction coassociativity",
        compose(tensor_map(tw.coaction, identity(e)), tw.coaction),
        compose(coherence(RatCoherence::Assoc, b, e, e),
                tensor_map(identity(b), tw.hopf.comul), tw.coaction),
        "torsor.twist")));
    tw.reports.push_back(check_equation(make_eq(
        "twisted coaction counit",
        compose(coherence(RatCoherence::RightUnit, b),
                tensor_map(identity(b), tw.hopf.counit), tw.coaction),
        identity(b), "torsor.twist")));
    CommAlgObj twisted_amb = tensor_alg(a, alg_of(tw.hopf));
    tw.reports.push_back(check_equation(make_eq(
        "twisted coaction preserves multiplication", compose(tw.coaction, a.mul),
        compose(twisted_amb.mul, tensor_map(tw.coaction, tw.coaction)), "torsor.twist")));
    tw.reports.push_back(check_equation(make_eq("twisted coaction preserves unit",
                                                compose(tw.coaction, a.unit), twisted_amb.unit,
                                                "torsor.twist")));
    tw.reports.push_back(check_equation(make_eq(
        "left and right coactions commute",
        compose(tensor_map(identity(c), tw.coaction), t.coaction),
        compose(tensor_map(t.coaction, identity(e)), tw.coaction), "torsor.twist")));

    tw.phi = compose(tensor_map(identity(b), a.mul), tensor_map(symmetry(b, b), identity(b)),
                     tensor_map(incl, identity(b)));
    tw.phi_inv = certify_iso(tw.phi);
    tw.reports.push_back(check_equation(make_eq(
        "pairing iso matches its displayed inverse", tw.phi_inv,
        compose(tensor_map(identity(e), a.mul), tensor_map(symmetry(b, e), identity(b)),
                tensor_map(tw.coaction, identity(b))),
        "torsor.twist")));
    tw.reports.push_back(check_equation(make_eq(
        "pairing iso is multiplicative", compose(tw.phi, tensor_map(tw.hopf.mul, identity(b))),
        compose(amb.mul, tensor_map(symmetry(b, b), identity(pp)),
                tensor_map(incl, identity(pp)), tensor_map(identity(e), tw.phi)),
        "torsor.twist")));
    return tw;
}

/* The cotensor x box_pi p inside x (x) p, as a coreflexive equalizer. */
inline EqResult twisted_carrier(const RatObj& p, const RatMap& coaction, const GroRep& x)
{
    RatMap over = tensor_map(x.coaction, identity(p));
    RatMap under = tensor_map(identity(x.carrier), coaction);
    RatMap retract = tensor_map(identity(x.carrier), counit_left(x.hopf, p));
    return coreflexive_equalizer(over, under, retract);
}

/* The twisted fiber functor omega_p on a roster of probe comodules: the
   cotensor carriers together with the lax comparison omega(x) (x) omega(y)
   -> omega(x (x) y), the unit comparison, and the collapse on trivial
   comodules.  All three are certified isomorphisms. */
struct GroTwistedFiber {
    GroTorsor torsor;
    std::vector<GroRep> probes;
    std::vector<EqResult> carriers;
    std::vector<RatMap> pair_coherence;      // row major over probe pairs
    RatMap unit_coherence;                   // kappa -> omega(unit probe)
    std::vector<RatMap> trivial_comparison;  // probe carrier -> omega(trivial probe)
    std::vector<Report> reports;
};

inline GroTwistedFiber twist_fiber(const GroTorsor& t, const std::vector<GroRep>& probes)
{
    const RatObj& b = t.algebra.carrier;
    GroTwistedFiber fib;
    fib.torsor = t;
    fib.probes = probes;
    for (const GroRep& x : probes) {
        if (!same_hopf(x.hopf, t.hopf))
            throw shape_mismatch("twist_fiber: probe over a different Hopf algebra");
        fib.carriers.push_back(twisted_carrier(b, t.coaction, x));
    }

    for (std::size_t i = 0; i < probes.size(); ++i)
        for (std::size_t j = 0; j < probes.size(); ++j) {
            EqResult both = twisted_carrier(b, t.coaction, rep_tensor(probes[i], probes[j]));
            RatMap merged = compose(
                merge_past_middle(t.algebra, probes[i].carrier, probes[j].carrier),
                tensor_map(fib.carriers[i].incl, fib.carriers[j].incl));
            RatMap omega = injection_factor(both.incl, merged, "twist_fiber: pair coherence");
            certify_iso(omega);
            fib.reports.push_back(check_equation(make_eq(
                "pair coherence square (" + std::to_string(i) + "," + std::to_string(j) + ")",
                compose(both.incl, omega), merged, "torsor.fiber")));
            fib.pair_coherence.push_back(std::move(omega));
        }

    EqResult unit_sub = twisted_carrier(b, t.coaction, rep_unit(t.hopf));
    fib.unit_coherence = injection_factor(unit_sub.incl, insert_right(rat_kappa(), t.algebra),
                                          "twist_fiber: unit coherence");
    certify_iso(fib.unit_coherence);
    fib.reports.push_back(check_equation(make_eq(
        "unit coherence square", compose(unit_sub.incl, fib.unit_coherence),
        insert_right(rat_kappa(), t.algebra), "torsor.fiber")));

    for (std::size_t i = 0; i < probes.size(); ++i) {
        const RatObj& z = probes[i].carrier;
        EqResult triv = twisted_carrier(b, t.coaction, trivial_rep(t.hopf, z));
        RatMap cmp = injection_factor(triv.incl, insert_right(z, t.algebra),
                                      "twist_fiber: trivial comparison");
        certify_iso(cmp);
        fib.reports.push_back(check_equation(make_eq(
            "trivial comparison square (" + std::to_string(i) + ")", compose(triv.incl, cmp),
            insert_right(z, t.algebra), "torsor.fiber")));
        fib.trivial_comparison.push_back(std::move(cmp));
    }
    return fib;
}

/* Untwisting: cotensoring a pi-comodule down to a pi^p-comodule and back
   lands on a carrier canonically isomorphic to the original.  The components
   are certified and, when morphisms are supplied, natural. */
struct GroEquivalenceCheck {
    GroTwist twist;
    std::vector<RatMap> components;  // round trip carrier -> probe carrier
    std::vector<Report> reports;
};

inline GroEquivalenceCheck twisted_equiv_check(const GroTorsor& t,
                                               const std::vector<GroRep>& probes,
                                               const std::vector<GroRepMor>& mors = {})
{
    const CommAlgObj& a = t.algebra;
    const RatObj& b = a.carrier;
    GroEquivalenceCheck eq;
    eq.twist = twist_group(t);
    const GroTwist& tw = eq.twist;
    const RatObj& e = tw.hopf.carrier;

    RatMap ring_coaction = compose(tensor_map(tw.hopf.antipode, identity(b)),
                                   symmetry(b, e), tw.coaction);

    struct Leg {
        EqResult forward;
        EqResult ring;
        RatMap component;
    };
    auto build = [&](const GroRep& x) {
        if (!same_hopf(x.hopf, t.hopf))
            throw shape_mismatch("twisted_equiv_check: probe over a different Hopf algebra");
        Leg leg;
        leg.forward = twisted_carrier(b, t.coaction, x);
        RatMap breve_coaction = injection_factor(
            tensor_map(leg.forward.incl, identity(e)),
            compose(tensor_map(identity(x.carrier), tw.coaction), leg.forward.incl),
            "twisted_equiv_check: twisted coaction");
        GroRep breve{tw.hopf, leg.forward.obj, breve_coaction};
        leg.ring = twisted_carrier(b, ring_coaction, breve);
        leg.component = injection_factor(
            insert_right(x.carrier, a),
            compose(tensor_map(identity(x.carrier), a.mul),
                    tensor_map(leg.forward.incl, identity(b)), leg.ring.incl),
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
        eq.reports.push_back(std::move(iso));
        eq.components.push_back(leg.component);
        legs.push_back(std::move(leg));
    }

    for (std::size_t k = 0; k < mors.size(); ++k) {
        const GroRepMor& m = mors[k];
        std::string tag = " (morphism " + std::to_string(k) + ")";
        Report ok = check_rep_mor(m);
        ok.name += tag;
        eq.reports.push_back(ok);
        Leg src = build(m.src);
        Leg dst = build(m.dst);
        RatMap fwd = injection_factor(
            dst.forward.incl, compose(tensor_map(m.map, identity(b)), src.forward.incl),
            "twisted_equiv_check: transported morphism");
        RatMap ringed = injection_factor(
            dst.ring.incl, compose(tensor_map(fwd, identity(b)), src.ring.incl),
            "twisted_equiv_check: doubly transported morphism");
        eq.reports.push_back(check_equation(make_eq(
            "component naturality" + tag, compose(m.map, src.component),
            compose(dst.component, ringed), "torsor.equivalence")));
    }
    return eq;
}

/* A morphism of torsors over the same Hopf algebra is an algebra map against
   the direction of the geometry, compatible with the coactions. */
struct GroTorsorMor {
    GroTorsor src;
    GroTorsor dst;
    RatMap alg;  // dst carrier -> src carrier
};

struct GroTorsorNat {
    std::vector<RatMap> components;  // omega_dst(x) -> omega_src(x)
    std::vector<Report> reports;
};

/* An isomorphism of torsors induces a natural isomorphism between the
   twisted fiber functors, compatible with the pair coherences.  Throws
   NotTorsorMorphism if the algebra map fails a law and NotInvertible if it
   is not an isomorphism. */
inline GroTorsorNat torsor_iso_to_nat(const GroTorsorMor& f, const std::vector<GroRep>& probes)
{
    if (!same_hopf(f.src.hopf, f.dst.hopf))
        throw shape_mismatch("torsor_iso_to_nat: torsors over different Hopf algebras");
    const RatObj& sb = f.src.algebra.carrier;
    const RatObj& db = f.dst.algebra.carrier;
    if (f.alg.dom.dim != db.dim || f.alg.cod.dim != sb.dim)
        throw shape_mismatch("torsor_iso_to_nat: map shape");

    GroTorsorNat nat;
    std::vector<Report> laws = {
        check_equation(make_eq("carrier map preserves multiplication",
                               compose(f.alg, f.dst.algebra.mul),
                               compose(f.src.algebra.mul, tensor_map(f.alg, f.alg)),
                               "torsor.morphism")),
        check_equation(make_eq("carrier map preserves unit", compose(f.alg, f.dst.algebra.unit),
                               f.src.algebra.unit, "torsor.morphism")),
        check_equation(make_eq("equivariance of the carrier map",
                               compose(f.src.coaction, f.alg),
                               compose(tensor_map(identity(f.src.hopf.carrier), f.alg),
                                       f.dst.coaction),
                               "torsor.morphism")),
    };
    for (const Report& r : laws)
        if (!r.passed)
            throw KosmosError("NotTorsorMorphism", detail::witness_detail(r));
    for (Report& r : laws)
        nat.reports.push_back(std::move(r));
    certify_iso(f.alg);

    std::vector<EqResult> src_subs, dst_subs;
    for (const GroRep& x : probes) {
        if (!same_hopf(x.hopf, f.src.hopf))
            throw shape_mismatch("torsor_iso_to_nat: probe over a different Hopf algebra");
        src_subs.push_back(twisted_carrier(sb, f.src.coaction, x));
        dst_subs.push_back(twisted_carrier(db, f.dst.coaction, x));
        RatMap cmp = injection_factor(
            src_subs.back().incl,
            compose(tensor_map(identity(x.carrier), f.alg), dst_subs.back().incl),
            "torsor_iso_to_nat: component");
        certify_iso(cmp);
        nat.components.push_back(std::move(cmp));
    }

    for (std::size_t i = 0; i < probes.size(); ++i)
        for (std::size_t j = 0; j < probes.size(); ++j) {
            GroRep pair = rep_tensor(probes[i], probes[j]);
            EqResult src_pair = twisted_carrier(sb, f.src.coaction, pair);
            EqResult dst_pair = twisted_carrier(db, f.dst.coaction, pair);
            RatMap comp_pair = injection_factor(
                src_pair.incl,
                compose(tensor_map(identity(pair.carrier), f.alg), dst_pair.incl),
                "torsor_iso_to_nat: component");
            RatMap omega_src = injection_factor(
                src_pair.incl,
                compose(merge_past_middle(f.src.algebra, probes[i].carrier, probes[j].carrier),
                        tensor_map(src_subs[i].incl, src_subs[j].incl)),
                "torsor_iso_to_nat: pair coherence");
            RatMap omega_dst = injection_factor(
                dst_pair.incl,
                compose(merge_past_middle(f.dst.algebra, probes[i].carrier, probes[j].carrier),
                        tensor_map(dst_subs[i].incl, dst_subs[j].incl)),
                "torsor_iso_to_nat: pair coherence");
            nat.reports.push_back(check_equation(make_eq(
                "components respect the pair coherence (" + std::to_string(i) + "," +
                    std::to_string(j) + ")",
                compose(comp_pair, omega_dst),
                compose(omega_src, tensor_map(nat.components[i], nat.components[j])),
                "torsor.fiber")));
        }
    return nat;
}

/* Rebuild a torsor from its twisted fiber functor: the cotensor of the
   cofree comodule on the scalars carries an algebra structure and a left
   cotranslation, and evaluation of the coaction is an equivariant algebra
   isomorphism back to the original carrier.  Throws RoundTripFailure if any
   comparison fails. */
struct GroRoundTrip {
    GroTorsor associated;
    RatMap counit;  // original carrier -> associated carrier
    RatMap counit_inv;
    std::vector<Report> reports;
};

inline GroRoundTrip fib_tors_roundtrip(const RatHopfObj& pi, const GroTorsor& t,
                                       const std::vector<GroRep>& probes)
{
    if (!same_hopf(pi, t.hopf))
        throw shape_mismatch("fib_tors_roundtrip: Hopf algebra mismatch");
    const RatObj& b = t.algebra.carrier;
    GroRep free = cofree_rep(pi, rat_kappa());
    EqResult cls = twisted_carrier(b, t.coaction, free);

    CommAlgObj shell{free.carrier,
                     RatMap{tensor_obj(free.carrier, free.carrier), free.carrier, pi.mul.matrix},
                     RatMap{rat_kappa(), free.carrier, pi.unit.matrix}};
    CommAlgObj amb = tensor_alg(shell, t.algebra);
    CommAlgObj assoc_alg{cls.obj,
                         eq_factor(cls, compose(amb.mul, tensor_map(cls.incl, cls.incl))),
                         eq_factor(cls, amb.unit)};
    RatMap coaction = injection_factor(tensor_map(identity(pi.carrier), cls.incl),
                                       compose(tensor_map(pi.comul, identity(b)), cls.incl),
                                       "fib_tors_roundtrip: induced coaction");

    GroRoundTrip out;
    out.associated = validate_left_torsor(assoc_alg, coaction, pi);
    for (const Report& r : out.associated.reports)
        out.reports.push_back(r);

    out.counit = eq_factor(cls, t.coaction);
    std::vector<Report> laws = {
        check_equation(make_eq("round trip counit is equivariant",
                               compose(coaction, out.counit),
                               compose(tensor_map(identity(pi.carrier), out.counit), t.coaction),
                               "torsor.roundtrip")),
        check_equation(make_eq("round trip counit preserves multiplication",
                               compose(out.counit, t.algebra.mul),
                               compose(assoc_alg.mul, tensor_map(out.counit, out.counit)),
                               "torsor.roundtrip")),
        check_equation(make_eq("round trip counit preserves unit",
                               compose(out.counit, t.algebra.unit), assoc_alg.unit,
                               "torsor.roundtrip")),
    };
    for (const Report& r : laws)
        if (!r.passed)
            throw KosmosError("RoundTripFailure", detail::witness_detail(r));
    for (Report& r : laws)
        out.reports.push_back(std::move(r));
    try {
        out.counit_inv = certify_iso(out.counit);
    } catch (const KosmosError& e) {
        throw KosmosError("RoundTripFailure", detail::strip_kind(e));
    }

    GroTorsorNat nat = torsor_iso_to_nat(GroTorsorMor{out.associated, t, out.counit}, probes);
    for (Report& r : nat.reports)
        out.reports.push_back(std::move(r));
    return out;
}

/* Algebra maps to the scalars of a plane algebra: the rational points of its
   spectrum.  Zero, one, or two points, decided by whether the discriminant
   of the generator's minimal polynomial is a rational square. */
inline std::vector<RatMap> rational_points_dim2(const CommAlgObj& a)
{
    if (a.carrier.dim != 2)
        throw KosmosError("NotDimTwo", "rational_points_dim2: carrier has dimension " +
                                           std::to_string(a.carrier.dim));
    const Rat u0 = a.unit.matrix[0][0];
    const Rat u1 = a.unit.matrix[1][0];
    if (u0 == 0 && u1 == 0)
        throw KosmosError("NotUnital", "rational_points_dim2: unit element vanishes");

    /* pick the basis vector independent of the unit and expand its square as
       alpha . 1 + beta . x */
    const std::size_t k = (u0 != 0) ? 1 : 0;
    Matrix basis = {{u0, k == 1 ? Rat(0) : Rat(1)}, {u1, k == 1 ? Rat(1) : Rat(0)}};
    Matrix square = {{a.mul.matrix[0][k * 2 + k]}, {a.mul.matrix[1][k * 2 + k]}};
    auto expansion = solve_exact(basis, square);
    if (!expansion)
        throw KosmosError("NotUnital", "rational_points_dim2: degenerate basis");
    const Rat alpha = (*expansion)[0][0];
    const Rat beta = (*expansion)[1][0];

    const Rat disc = beta * beta + 4 * alpha;
    std::vector<Rat> roots;
    if (disc == 0) {
        roots.push_back(beta / 2);
    } else if (disc > 0) {
        const Int num = numerator(disc);
        const Int den = denominator(disc);
        const Int sn = sqrt(num);
        const Int sd = sqrt(den);
        if (sn * sn == num && sd * sd == den) {
            const Rat s(sn, sd);
            roots.push_back((beta - s) / 2);
            roots.push_back((beta + s) / 2);
        }
    }

    Matrix rows = {{basis[0][0], basis[1][0]}, {basis[0][1], basis[1][1]}};
    std::vector<RatMap> points;
    for (const Rat& r : roots) {
        auto w = solve_exact(rows, Matrix{{Rat(1)}, {r}});
        if (!w)
            continue;
        RatMap point{a.carrier, rat_kappa(), {{(*w)[0][0], (*w)[1][0]}}};
        if (all_passed(check_alg_mor(point, a, kappa_alg())))
            points.push_back(std::move(point));
    }
    std::sort(points.begin(), points.end(), [](const RatMap& f, const RatMap& g) {
        if (f.matrix[0][0] != g.matrix[0][0])
            return f.matrix[0][0] < g.matrix[0][0];
        return f.matrix[0][1] < g.matrix[0][1];
    });
    return points;
}

}
