#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <vector>

#include "kosmos/standard.hpp"
#include "kosmos/torsor_gal.hpp"

using namespace kosmos;

namespace {

std::vector<FinGroupObj> group_roster()
{
    return {trivial_group(), cyclic(2), cyclic(3), cyclic(4), klein_four(), symmetric3()};
}

// a + 2g mod 3: a torsor table over Z/3 that is not the multiplication table
GalTorsor skew_torsor()
{
    FinGroupObj c3 = cyclic(3);
    FinObj p = fin_obj(3);
    std::vector<std::size_t> table(9);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t g = 0; g < 3; ++g)
            table[a * 3 + g] = (a + 2 * g) % 3;
    FinMap action{tensor_obj(p, c3.carrier), p, table};
    return validate_right_torsor(p, action, c3);
}

}  // namespace

TEST_CASE("right torsor validation")
{
    SECTION("regular translations satisfy every identity")
    {
        for (const auto& g : group_roster()) {
            INFO("order " << g.carrier.size);
            GalTorsor t = regular_torsor(g);
            REQUIRE(t.reports.size() == 12);
            REQUIRE(all_passed(t.reports));

            const FinObj& c = g.carrier;
            FinMap displayed_inv =
                compose(tensor_map(identity(c), g.mul),
                        tensor_map(identity(c), tensor_map(g.inv, identity(c))),
                        tensor_map(diagonal(c), identity(c)));
            REQUIRE(equals(t.tau_inv, displayed_inv));
            REQUIRE(equals(t.div, compose(g.mul, tensor_map(g.inv, identity(c)))));
        }
    }

    SECTION("skew translation over the cyclic group of three")
    {
        GalTorsor t = skew_torsor();
        REQUIRE(all_passed(t.reports));
        std::vector<std::size_t> expected_tau(9), expected_div(9);
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) {
                expected_tau[a * 3 + b] = a * 3 + (a + 2 * b) % 3;
                expected_div[a * 3 + b] = (2 * (3 + b - a)) % 3;
            }
        REQUIRE(t.tau.table == expected_tau);
        REQUIRE(t.div.table == expected_div);
    }

    SECTION("a constant table breaks the unit law")
    {
        FinGroupObj c2 = cyclic(2);
        FinObj p = fin_obj(2);
        FinMap constant{tensor_obj(p, c2.carrier), p, {0, 0, 0, 0}};
        try {
            validate_right_torsor(p, constant, c2);
            FAIL("constant action accepted");
        } catch (const KosmosError& e) {
            REQUIRE(e.kind == "ActionLaw");
        }
    }

    SECTION("a fixed-point action leaves tau degenerate")
    {
        FinGroupObj c2 = cyclic(2);
        FinObj p = fin_obj(2);
        FinMap project{tensor_obj(p, c2.carrier), p, {0, 0, 1, 1}};
        try {
            validate_right_torsor(p, project, c2);
            FAIL("fixed-point action accepted");
        } catch (const KosmosError& e) {
            REQUIRE(e.kind == "TauNotIso");
        }
    }
}

TEST_CASE("twisted group of a torsor")
{
    SECTION("regular torsors twist back to the group itself")
    {
        for (const auto& g : group_roster()) {
            GalTwist tw = twist_group(regular_torsor(g));
            REQUIRE(all_passed(tw.reports));
            REQUIRE(tw.group.carrier.size == g.carrier.size);

            // independent comparison: (a, b) |-> a b^{-1} is constant on classes
            FinMap w = coeq_factor(tw.classes,
                                   compose(g.mul, tensor_map(identity(g.carrier), g.inv)));
            certify_iso(w);
            REQUIRE(all_passed(check_group_mor(FinGroupMor{tw.group, g, w})));
        }
    }

    SECTION("skew torsor twists to a three-element group")
    {
        GalTwist tw = twist_group(skew_torsor());
        REQUIRE(all_passed(tw.reports));
        REQUIRE(tw.group.carrier.size == 3);
    }
}

TEST_CASE("twisted fiber functor")
{
    SECTION("regular fiber over the cyclic group of three")
    {
        FinGroupObj c3 = cyclic(3);
        GalTorsor t = regular_torsor(c3);
        std::vector<GalRep> probes = probe_reps(c3);
        GalTwistedFiber fib = twist_fiber(t, probes);
        REQUIRE(all_passed(fib.reports));
        REQUIRE(fib.carriers[2].obj.size == 3);
        REQUIRE(fib.unit_coherence.dom.size == 1);
        for (std::size_t i = 0; i < probes.size(); ++i) {
            REQUIRE(fib.carriers[i].obj.size == probes[i].carrier.size);
            REQUIRE(fib.trivial_comparison[i].cod.size == probes[i].carrier.size);
        }
    }

    SECTION("coherences across the roster")
    {
        for (const auto& g : group_roster()) {
            GalTwistedFiber fib = twist_fiber(regular_torsor(g), probe_reps(g));
            REQUIRE(all_passed(fib.reports));
        }
    }

    SECTION("probes over the wrong group are rejected")
    {
        GalTorsor t = regular_torsor(cyclic(2));
        try {
            twist_fiber(t, probe_reps(cyclic(3)));
            FAIL("mismatched probe accepted");
        } catch (const KosmosError& e) {
            REQUIRE(e.kind == "ShapeMismatch");
        }
    }
}

TEST_CASE("twist equivalence round trip")
{
    SECTION("frozen components over the cyclic group of two")
    {
        FinGroupObj c2 = cyclic(2);
        GalRep reg = free_rep(c2, fin_kappa());
        std::vector<GalRepMor> mors = {
            GalRepMor{reg, reg, FinMap{c2.carrier, c2.carrier, {1, 0}}}, orbit_unit(reg)};
        GalEquivalenceCheck eq = twisted_equiv_check(regular_torsor(c2), probe_reps(c2), mors);
        REQUIRE(all_passed(eq.reports));
        REQUIRE(eq.components[0].table == std::vector<std::size_t>{0});
        REQUIRE(eq.components[1].table == std::vector<std::size_t>{0, 1});
        REQUIRE(eq.components[2].table == std::vector<std::size_t>{0, 1});
    }

    SECTION("components across the roster")
    {
        for (const auto& g : group_roster()) {
            GalEquivalenceCheck eq = twisted_equiv_check(regular_torsor(g), probe_reps(g));
            REQUIRE(all_passed(eq.reports));
            REQUIRE(eq.components.size() == 5);
        }
    }

    SECTION("skew torsor equivalence")
    {
        GalEquivalenceCheck eq = twisted_equiv_check(skew_torsor(), probe_reps(cyclic(3)));
        REQUIRE(all_passed(eq.reports));
    }
}

TEST_CASE("torsor isomorphisms induce natural isos")
{
    SECTION("right translation on the cyclic group of two")
    {
        FinGroupObj c2 = cyclic(2);
        GalTorsor t = regular_torsor(c2);
        FinMap shift{c2.carrier, c2.carrier, {1, 0}};
        GalTorsorNat nat = torsor_iso_to_nat(GalTorsorMor{t, t, shift}, probe_reps(c2));
        REQUIRE(all_passed(nat.reports));
        REQUIRE(nat.components[1].table == std::vector<std::size_t>{0, 1});
        REQUIRE(nat.components[2].table == std::vector<std::size_t>{1, 0});
        // shift is its own inverse, so each component squares to the identity
        for (const FinMap& c : nat.components)
            REQUIRE(equals(compose(c, c), identity(c.dom)));
    }

    SECTION("the identity morphism gives identity components")
    {
        FinGroupObj c3 = cyclic(3);
        GalTorsor t = regular_torsor(c3);
        GalTorsorNat nat =
            torsor_iso_to_nat(GalTorsorMor{t, t, identity(t.carrier)}, probe_reps(c3));
        REQUIRE(all_passed(nat.reports));
        for (const FinMap& c : nat.components)
            REQUIRE(equals(c, identity(c.dom)));
    }

    SECTION("non-equivariant maps are rejected")
    {
        FinGroupObj c2 = cyclic(2);
        GalTorsor t = regular_torsor(c2);
        FinMap crush{c2.carrier, c2.carrier, {0, 0}};
        try {
            torsor_iso_to_nat(GalTorsorMor{t, t, crush}, probe_reps(c2));
            FAIL("non-equivariant map accepted");
        } catch (const KosmosError& e) {
            REQUIRE(e.kind == "NotTorsorMorphism");
        }
    }
}

TEST_CASE("round trip from the twisted fiber functor")
{
    SECTION("regular torsors across the roster")
    {
        for (const auto& g : group_roster()) {
            GalRoundTrip rt = fib_tors_roundtrip(g, regular_torsor(g), probe_reps(g));
            REQUIRE(all_passed(rt.reports));
            REQUIRE(rt.associated.carrier.size == g.carrier.size);
        }
    }

    SECTION("frozen counit over the cyclic group of two")
    {
        FinGroupObj c2 = cyclic(2);
        GalRoundTrip rt = fib_tors_roundtrip(c2, regular_torsor(c2), probe_reps(c2));
        REQUIRE(rt.counit.table == std::vector<std::size_t>{0, 1});
    }

    SECTION("skew torsor round trip")
    {
        GalRoundTrip rt = fib_tors_roundtrip(cyclic(3), skew_torsor(), probe_reps(cyclic(3)));
        REQUIRE(all_passed(rt.reports));
        REQUIRE(rt.counit.table == std::vector<std::size_t>{0, 2, 1});
    }
}
