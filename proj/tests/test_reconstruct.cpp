#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <vector>

#include "kosmos/reconstruct_gal.hpp"
#include "kosmos/reconstruct_gro.hpp"
#include "kosmos/standard.hpp"

using namespace kosmos;

namespace {

std::vector<FinGroupObj> group_roster()
{
    return {trivial_group(), cyclic(2), cyclic(3), cyclic(4), klein_four(), symmetric3()};
}

std::vector<RatHopfObj> hopf_roster()
{
    return {kappa_hopf(), function_hopf(cyclic(2)), function_hopf(cyclic(3)),
            function_hopf(klein_four()), function_hopf(symmetric3())};
}

GroRep sign_comodule(const RatHopfObj& oz2)
{
    return GroRep{oz2, rat_kappa(), RatMap{rat_kappa(), tensor_obj(rat_kappa(), oz2.carrier),
                                           {{1}, {-1}}}};
}

}

TEST_CASE("the reflection along the free functor is the strict identity")
{
    SECTION("hand expansion of the colax factor")
    {
        // (g, i) goes to ((g, 0), (g, i)); with |pi| = 3 and |x| = 2 the
        // codomain index is 8 g + i
        const FinMap inner = colax_pair(cyclic(3), fin_kappa(), fin_obj(2));
        REQUIRE(inner.table == std::vector<std::size_t>{0, 1, 8, 9, 16, 17});
    }

    SECTION("the assembled map is an identity table")
    {
        const FinMap hat = reflection_hatar(cyclic(3), fin_obj(2));
        REQUIRE(hat.dom.size == 6);
        REQUIRE(hat.cod.size == 6);
        REQUIRE(hat.table == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    }

    SECTION("naturality squares commute for every roster group")
    {
        const FinMap skip{fin_obj(2), fin_obj(3), {0, 2}};
        const FinMap swap{fin_obj(2), fin_obj(2), {1, 0}};
        const FinMap crush = terminal_map(fin_obj(3));
        for (const auto& g : group_roster())
            for (const auto& f : {skip, swap, crush}) {
                const Report r = hatar_natural(g, f);
                INFO("group order " << g.carrier.size);
                REQUIRE(r.passed);
            }
    }
}

TEST_CASE("the coreflection along the cofree functor is the strict identity")
{
    SECTION("hand expansion at the unit object")
    {
        const RatMap tah = coreflection_tahar(function_hopf(cyclic(2)), rat_kappa());
        REQUIRE(tah.matrix == Matrix{{1, 0}, {0, 1}});
    }

    SECTION("naturality squares commute for every roster algebra")
    {
        const RatMap fold{rat_obj(2), rat_kappa(), {{1, 2}}};
        const RatMap shear{rat_obj(2), rat_obj(2), {{1, 0}, {1, 1}}};
        const RatMap lift{rat_kappa(), rat_obj(2), {{3}, {-1}}};
        for (const auto& h : hopf_roster())
            for (const auto& f : {fold, shear, lift}) {
                const Report r = tahar_natural(h, f);
                INFO("dim " << h.carrier.dim);
                REQUIRE(r.passed);
            }
    }
}

TEST_CASE("the recovered group is the model group on the nose")
{
    SECTION("hand expansion of the inverse action at the regular object")
    {
        // (g, h) goes to g^{-1} h
        const FinMap check = inverse_action(cyclic(3), free_rep(cyclic(3), fin_kappa()));
        REQUIRE(check.table == std::vector<std::size_t>{0, 1, 2, 2, 0, 1, 1, 2, 0});
    }

    SECTION("structure tables and witness agree across the roster")
    {
        for (const auto& g : group_roster()) {
            const FinReconstruction rec = reconstruct_galois(g);
            INFO("group order " << g.carrier.size);
            REQUIRE(rec.recovered.carrier.size == g.carrier.size);
            REQUIRE(rec.recovered.mul.table == g.mul.table);
            REQUIRE(rec.recovered.unit == g.unit);
            REQUIRE(rec.recovered.inv.table == g.inv.table);
            for (const auto& r : rec.reports) {
                INFO(r.name);
                REQUIRE(r.passed);
            }
        }
    }
}

TEST_CASE("the recovered function algebra is the model algebra on the nose")
{
    SECTION("hand expansion of the inverse coaction at the cofree object")
    {
        // e_a goes to the sum over b of e_{a b} tensor e_b
        const RatHopfObj oz2 = function_hopf(cyclic(2));
        const RatMap check = inverse_coaction(oz2, cofree_rep(oz2, rat_kappa()));
        REQUIRE(check.matrix == Matrix{{1, 0}, {0, 1}, {0, 1}, {1, 0}});
    }

    SECTION("structure matrices and witness agree across the roster")
    {
        for (const auto& h : hopf_roster()) {
            const RatReconstruction rec = reconstruct_grothendieck(h);
            INFO("dim " << h.carrier.dim);
            REQUIRE(rec.recovered.carrier.dim == h.carrier.dim);
            REQUIRE(rec.recovered.mul.matrix == h.mul.matrix);
            REQUIRE(rec.recovered.unit.matrix == h.unit.matrix);
            REQUIRE(rec.recovered.comul.matrix == h.comul.matrix);
            REQUIRE(rec.recovered.counit.matrix == h.counit.matrix);
            REQUIRE(rec.recovered.antipode.matrix == h.antipode.matrix);
            for (const auto& r : rec.reports) {
                INFO(r.name);
                REQUIRE(r.passed);
            }
        }
    }
}

TEST_CASE("transport along the universal element is the identity assignment")
{
    SECTION("group side comparison across the roster")
    {
        for (const auto& g : group_roster()) {
            const FinComparison cmp = comparison_functor(g, probe_reps(g));
            INFO("group order " << g.carrier.size);
            REQUIRE(cmp.images.size() == 5);
            REQUIRE(all_passed(cmp.reports));
        }
    }

    SECTION("algebra side comparison across the roster")
    {
        for (const auto& h : hopf_roster()) {
            const RatComparison cmp = comparison_functor(h, probe_reps(h));
            INFO("dim " << h.carrier.dim);
            REQUIRE(cmp.images.size() == 5);
            REQUIRE(all_passed(cmp.reports));
        }
    }
}

TEST_CASE("natural families over a coefficient object biject with group valued functions")
{
    SECTION("one point coefficient over the two element group")
    {
        const FinAutCheck chk = aut_presheaf_check(cyclic(2), fin_kappa());
        REQUIRE(chk.count == 2);
        REQUIRE(all_passed(chk.reports));

        // the nonidentity function translates the regular object
        const FinMap theta =
            aut_component(chk.hom.elements[1], free_rep(cyclic(2), fin_kappa()));
        REQUIRE(theta.table == std::vector<std::size_t>{1, 0});
    }

    SECTION("two point coefficient over the two element group")
    {
        const FinAutCheck chk = aut_presheaf_check(cyclic(2), fin_obj(2));
        REQUIRE(chk.count == 4);
        REQUIRE(chk.hom.group.carrier.size == 4);
        REQUIRE(all_passed(chk.reports));
    }

    SECTION("three point coefficient over the three element group")
    {
        const FinAutCheck chk = aut_presheaf_check(cyclic(3), fin_obj(3));
        REQUIRE(chk.count == 27);
        REQUIRE(chk.hom.group.carrier.size == 27);
        REQUIRE(all_passed(chk.reports));
    }

    SECTION("oversized coefficient objects are refused")
    {
        REQUIRE_THROWS_AS(aut_presheaf_check(symmetric3(), fin_obj(4)), KosmosError);
        try {
            aut_presheaf_check(symmetric3(), fin_obj(4));
        } catch (const KosmosError& e) {
            REQUIRE(e.kind == "CarrierTooLarge");
        }
    }
}

TEST_CASE("dual natural families are indexed by algebra points")
{
    const RatHopfObj oz2 = function_hopf(cyclic(2));

    SECTION("the identity point gives back the coaction itself")
    {
        const RatAutCheck chk = aut_presheaf_check(oz2, alg_of(oz2), {identity(oz2.carrier)});
        REQUIRE(chk.count == 1);
        REQUIRE(all_passed(chk.reports));
        for (const auto& X : probe_reps(oz2))
            REQUIRE(aut_component(identity(oz2.carrier), X).matrix == X.coaction.matrix);
    }

    SECTION("evaluation characters over the base field")
    {
        const RatAutCheck chk = aut_presheaf_check(
            oz2, kappa_alg(), {evaluation_point(oz2, 0), evaluation_point(oz2, 1)});
        REQUIRE(chk.count == 2);
        REQUIRE(all_passed(chk.reports));
    }

    SECTION("convolution of evaluation characters follows the group law")
    {
        const RatMap prod = convolution(evaluation_point(oz2, 1), evaluation_point(oz2, 1),
                                        oz2, kappa_alg());
        REQUIRE(prod.matrix == evaluation_point(oz2, 0).matrix);
    }

    SECTION("the nontrivial character negates the sign comodule")
    {
        const RatMap theta = aut_component(evaluation_point(oz2, 1), sign_comodule(oz2));
        REQUIRE(theta.matrix == Matrix{{-1}});
    }

    SECTION("all three characters of the cyclic function algebra certify")
    {
        const RatHopfObj oz3 = function_hopf(cyclic(3));
        const RatAutCheck chk = aut_presheaf_check(
            oz3, kappa_alg(),
            {evaluation_point(oz3, 0), evaluation_point(oz3, 1), evaluation_point(oz3, 2)});
        REQUIRE(chk.count == 3);
        REQUIRE(all_passed(chk.reports));
    }
}
