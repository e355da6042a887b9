#include <catch2/catch_amalgamated.hpp>

#include "kosmos/finset.hpp"
#include "kosmos/lawcheck.hpp"
#include "kosmos/ratvec.hpp"

using namespace kosmos;

namespace {

/* Independent quotient oracle: naive reflexive-symmetric-transitive closure of
   the generated relation, no union-find. */
std::vector<std::size_t> closure_classes(std::size_t n, const std::vector<std::size_t>& fa,
                                         const std::vector<std::size_t>& ga)
{
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        rel[i][i] = true;
    for (std::size_t a = 0; a < fa.size(); ++a) {
        rel[fa[a]][ga[a]] = true;
        rel[ga[a]][fa[a]] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rel[i][k] && rel[k][j])
                    rel[i][j] = true;
    std::vector<std::size_t> cls(n, n);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] != n)
            continue;
        for (std::size_t j = i; j < n; ++j)
            if (rel[i][j])
                cls[j] = next;
        ++next;
    }
    return cls;
}

Matrix mat(std::initializer_list<std::initializer_list<int>> rows)
{
    Matrix m;
    for (auto& r : rows) {
        std::vector<Rat> row;
        for (int v : r)
            row.emplace_back(v);
        m.push_back(std::move(row));
    }
    return m;
}

RatMap rmap(std::size_t dom, std::size_t cod, Matrix m)
{
    return RatMap{rat_obj(dom), rat_obj(cod), std::move(m)};
}

}

TEST_CASE("tensor objects use the row-major pairing and are strict")
{
    FinObj x = fin_obj(2), y = fin_obj(3), z = fin_obj(2);
    REQUIRE(tensor_obj(x, y).size == 6);
    // pair (1,2) lands at 1*3+2
    REQUIRE(symmetry(x, y).table[1 * 3 + 2] == 2 * 2 + 1);
    REQUIRE(tensor_obj(x, fin_kappa()).size == x.size);
    REQUIRE(tensor_obj(tensor_obj(x, y), z).size == tensor_obj(x, tensor_obj(y, z)).size);

    REQUIRE(tensor_obj(rat_obj(2), rat_obj(3)).dim == 6);
    REQUIRE(tensor_obj(rat_obj(4), rat_kappa()).dim == 4);
}

TEST_CASE("tensor of maps evaluates the pairing formula")
{
    FinObj two = fin_obj(2);
    FinMap swap{two, two, {1, 0}};
    FinMap id2 = identity(two);
    REQUIRE(tensor_map(swap, id2).table == std::vector<std::size_t>{2, 3, 0, 1});
    REQUIRE(equals(tensor_map(id2, id2), identity(tensor_obj(two, two))));

    RatMap f = rmap(1, 1, mat({{2}}));
    RatMap g = rmap(1, 1, mat({{3}}));
    REQUIRE(tensor_map(f, g).matrix[0][0] == 6);

    // Kronecker against direct evaluation on basis pairs
    RatMap a = rmap(2, 2, mat({{1, 2}, {3, 4}}));
    RatMap b = rmap(2, 3, mat({{0, 1}, {5, 0}, {7, 1}}));
    RatMap k = tensor_map(a, b);
    for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
            for (std::size_t i1 = 0; i1 < 2; ++i1)
                for (std::size_t i2 = 0; i2 < 3; ++i2)
                    REQUIRE(k.matrix[i1 * 3 + i2][j1 * 2 + j2] == a.matrix[i1][j1] * b.matrix[i2][j2]);
}

TEST_CASE("symmetry is the pairing swap and an involution")
{
    FinObj x = fin_obj(2), y = fin_obj(3);
    REQUIRE(symmetry(x, y).table == std::vector<std::size_t>{0, 2, 4, 1, 3, 5});
    REQUIRE(equals(symmetry(fin_kappa(), fin_kappa()), identity(fin_kappa())));
    FinObj w = fin_obj(2);
    REQUIRE(equals(compose(symmetry(w, w), symmetry(w, w)), identity(tensor_obj(w, w))));

    RatObj u = rat_obj(2), v = rat_obj(2);
    REQUIRE(equals(compose(symmetry(v, u), symmetry(u, v)), identity(tensor_obj(u, v))));
}

TEST_CASE("symmetry is natural in both arguments")
{
    // exhaustive over all maps between sets of size <= 2, spot checks beyond
    std::vector<FinObj> objs = {fin_obj(1), fin_obj(2)};
    auto all_maps = [](const FinObj& d, const FinObj& c) {
        std::vector<FinMap> out;
        std::size_t total = 1;
        for (std::size_t i = 0; i < d.size; ++i)
            total *= c.size;
        for (std::size_t k = 0; k < total; ++k) {
            FinMap m{d, c, std::vector<std::size_t>(d.size)};
            std::size_t t = k;
            for (std::size_t i = 0; i < d.size; ++i) {
                m.table[i] = t % c.size;
                t /= c.size;
            }
            out.push_back(std::move(m));
        }
        return out;
    };
    for (const auto& x : objs)
        for (const auto& xx : objs)
            for (const auto& y : objs)
                for (const auto& yy : objs)
                    for (const auto& f : all_maps(x, xx))
                        for (const auto& g : all_maps(y, yy)) {
                            FinMap lhs = compose(tensor_map(g, f), symmetry(f.dom, g.dom));
                            FinMap rhs = compose(symmetry(f.cod, g.cod), tensor_map(f, g));
                            REQUIRE(equals(lhs, rhs));
                        }

    FinObj a = fin_obj(3), b = fin_obj(4);
    FinMap f{a, b, {2, 0, 3}};
    FinMap g{b, a, {1, 1, 0, 2}};
    REQUIRE(equals(compose(tensor_map(g, f), symmetry(a, b)), compose(symmetry(b, a), tensor_map(f, g))));

    RatMap p = rmap(2, 3, mat({{1, 0}, {2, 1}, {0, 5}}));
    RatMap q = rmap(3, 2, mat({{1, 1, 0}, {0, 2, 7}}));
    REQUIRE(equals(compose(tensor_map(q, p), symmetry(p.dom, q.dom)),
                   compose(symmetry(p.cod, q.cod), tensor_map(p, q))));
}

TEST_CASE("coherence morphisms are identities")
{
    FinObj two = fin_obj(2);
    REQUIRE(equals(coherence(Coherence::Assoc, two, two, two), identity(fin_obj(8))));
    REQUIRE(equals(coherence(Coherence::LeftUnit, fin_obj(3)), identity(fin_obj(3))));
    REQUIRE(equals(coherence(RatCoherence::RightUnit, rat_obj(4)), identity(rat_obj(4))));
}

TEST_CASE("compose, identity and equals behave and reject bad shapes")
{
    FinObj two = fin_obj(2);
    FinMap swap{two, two, {1, 0}};
    REQUIRE(equals(compose(identity(two), swap), swap));
    REQUIRE(equals(compose(swap, swap), identity(two)));
    REQUIRE_THROWS_AS(compose(swap, FinMap{fin_obj(3), fin_obj(3), {0, 1, 2}}), KosmosError);
    REQUIRE_THROWS_AS(equals(swap, FinMap{fin_obj(3), two, {0, 1, 0}}), KosmosError);

    RatMap half = rmap(1, 1, Matrix{{Rat(1, 2)}});
    RatMap twice = rmap(1, 1, mat({{2}}));
    REQUIRE(compose(half, twice).matrix[0][0] == 1);
    // three argument form composes right to left
    RatMap three = rmap(1, 1, mat({{3}}));
    REQUIRE(compose(half, twice, three).matrix[0][0] == 3);
}

TEST_CASE("reflexive coequalizer computes the canonical quotient")
{
    SECTION("equal pair gives a relabeling bijection")
    {
        FinObj b = fin_obj(3);
        FinMap f{b, b, {2, 1, 0}};
        FinMap s = identity(b);
        // f = g, section must split both; use f = g = id for a legal section
        CoeqResult res = reflexive_coequalizer(identity(b), identity(b), s);
        REQUIRE(res.obj.size == 3);
        REQUIRE(equals(res.proj, identity(b)));
        (void)f;
    }
    SECTION("frozen example collapses 2 and the orbit of 0,1 stays split")
    {
        FinObj a = fin_obj(4), b = fin_obj(3);
        FinMap f{a, b, {0, 1, 2, 0}};
        FinMap g{a, b, {0, 1, 2, 1}};
        FinMap s{b, a, {0, 1, 2}};
        CoeqResult res = reflexive_coequalizer(f, g, s);
        REQUIRE(res.obj.size == 2);
        REQUIRE(res.proj.table == std::vector<std::size_t>{0, 0, 1});
        REQUIRE(res.obj.labels == std::vector<std::string>{"0", "2"});

        auto oracle = closure_classes(3, f.table, g.table);
        std::size_t oracle_count = *std::max_element(oracle.begin(), oracle.end()) + 1;
        REQUIRE(oracle_count == res.obj.size);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                REQUIRE((oracle[i] == oracle[j]) == (res.proj.table[i] == res.proj.table[j]));
    }
    SECTION("multiplication against second projection collapses a group carrier")
    {
        // Z/2: A = pi x pi, f = mul, g = second projection, s(h) = (e, h)
        FinObj pi = fin_obj(2);
        FinObj a = tensor_obj(pi, pi);
        FinMap f{a, pi, {0, 1, 1, 0}};
        FinMap g{a, pi, {0, 1, 0, 1}};
        FinMap s{pi, a, {0, 1}};
        CoeqResult res = reflexive_coequalizer(f, g, s);
        REQUIRE(res.obj.size == 1);

        auto oracle = closure_classes(2, f.table, g.table);
        REQUIRE(*std::max_element(oracle.begin(), oracle.end()) == 0);
    }
    SECTION("invalid sections are rejected")
    {
        FinObj a = fin_obj(2), b = fin_obj(2);
        FinMap f = identity(b), g{a, b, {1, 0}};
        FinMap s{b, a, {0, 0}};
        REQUIRE_THROWS_MATCHES(reflexive_coequalizer(f, g, s), KosmosError,
                               Catch::Matchers::Predicate<KosmosError>(
                                   [](const KosmosError& e) { return e.kind == "SectionInvalid"; }));
    }
}

TEST_CASE("coequalizer factorization is the unique universal map")
{
    FinObj a = fin_obj(4), b = fin_obj(3);
    FinMap f{a, b, {0, 1, 2, 0}};
    FinMap g{a, b, {0, 1, 2, 1}};
    FinMap s{b, a, {0, 1, 2}};
    CoeqResult res = reflexive_coequalizer(f, g, s);

    SECTION("factoring the projection returns the identity")
    {
        FinMap u = coeq_factor(res, res.proj);
        REQUIRE(equals(u, identity(res.obj)));
    }
    SECTION("constant maps factor to constants")
    {
        FinMap h{b, fin_obj(2), {1, 1, 1}};
        FinMap u = coeq_factor(res, h);
        REQUIRE(u.table == std::vector<std::size_t>{1, 1});
        REQUIRE(equals(compose(u, res.proj), h));
    }
    SECTION("terminal map factors through the terminal map")
    {
        FinMap u = coeq_factor(res, terminal_map(b));
        REQUIRE(equals(u, terminal_map(res.obj)));
    }
    SECTION("non-coequalizing maps are rejected")
    {
        FinMap h = identity(b);
        REQUIRE_THROWS_MATCHES(coeq_factor(res, h), KosmosError,
                               Catch::Matchers::Predicate<KosmosError>(
                                   [](const KosmosError& e) { return e.kind == "NotCoequalizing"; }));
    }
}

TEST_CASE("coreflexive equalizer computes the canonical subspace")
{
    SECTION("equal pair returns the whole space")
    {
        RatMap f = rmap(2, 2, mat({{1, 2}, {0, 1}}));
        EqResult res = coreflexive_equalizer(f, f, certify_iso(f));
        REQUIRE(res.obj.dim == 2);
        REQUIRE(equals(res.incl, identity(rat_obj(2))));
    }
    SECTION("frozen 2 into 3 example has the expected reduced basis")
    {
        RatMap f = rmap(2, 3, mat({{1, 0}, {0, 1}, {0, 0}}));
        RatMap g = rmap(2, 3, mat({{1, 0}, {0, 1}, {1, 1}}));
        RatMap r = rmap(3, 2, mat({{1, 0, 0}, {0, 1, 0}}));
        EqResult res = coreflexive_equalizer(f, g, r);
        REQUIRE(res.obj.dim == 1);
        REQUIRE(res.incl.matrix == mat({{1}, {-1}}));

        // oracle: defining property, injectivity, canonical shape
        REQUIRE(equals(compose(f, res.incl), compose(g, res.incl)));
        const std::size_t ambient = res.incl.cod.dim;
        // rank via row reduction of the transpose
        Matrix t(res.obj.dim, std::vector<Rat>(ambient));
        for (std::size_t i = 0; i < ambient; ++i)
            for (std::size_t j = 0; j < res.obj.dim; ++j)
                t[j][i] = res.incl.matrix[i][j];
        REQUIRE(rref(t).size() == res.obj.dim);

        // rank-nullity against the difference matrix
        Matrix diff = mat({{0, 0}, {0, 0}, {-1, -1}});
        REQUIRE(rref(diff).size() + res.obj.dim == 2);
    }
    SECTION("zero dimensional spaces work")
    {
        RatMap z = rmap(0, 0, Matrix{});
        EqResult res = coreflexive_equalizer(z, z, z);
        REQUIRE(res.obj.dim == 0);
    }
    SECTION("invalid retractions are rejected")
    {
        RatMap f = rmap(1, 2, mat({{1}, {0}}));
        RatMap g = rmap(1, 2, mat({{1}, {1}}));
        RatMap bad = rmap(2, 1, mat({{0, 1}}));
        REQUIRE_THROWS_MATCHES(coreflexive_equalizer(f, g, bad), KosmosError,
                               Catch::Matchers::Predicate<KosmosError>(
                                   [](const KosmosError& e) { return e.kind == "RetractionInvalid"; }));
    }
}

TEST_CASE("equalizer factorization solves exactly")
{
    RatMap f = rmap(2, 3, mat({{1, 0}, {0, 1}, {0, 0}}));
    RatMap g = rmap(2, 3, mat({{1, 0}, {0, 1}, {1, 1}}));
    RatMap r = rmap(3, 2, mat({{1, 0, 0}, {0, 1, 0}}));
    EqResult res = coreflexive_equalizer(f, g, r);

    SECTION("factoring the inclusion returns the identity")
    {
        REQUIRE(equals(eq_factor(res, res.incl), identity(res.obj)));
    }
    SECTION("zero factors to zero")
    {
        REQUIRE(equals(eq_factor(res, zero_map(rat_obj(1), rat_obj(2))), zero_map(rat_obj(1), res.obj)));
    }
    SECTION("frozen solve gives the 1x1 matrix 2")
    {
        RatMap h = rmap(1, 2, mat({{2}, {-2}}));
        RatMap u = eq_factor(res, h);
        REQUIRE(u.matrix == mat({{2}}));
        REQUIRE(equals(compose(res.incl, u), h));
    }
    SECTION("non-equalizing maps are rejected")
    {
        RatMap h = rmap(1, 2, mat({{1}, {0}}));
        REQUIRE_THROWS_MATCHES(eq_factor(res, h), KosmosError,
                               Catch::Matchers::Predicate<KosmosError>(
                                   [](const KosmosError& e) { return e.kind == "NotEqualizing"; }));
    }
}

TEST_CASE("rational parsing and printing round-trips")
{
    REQUIRE(rat_str(rat_parse("3/6")) == "1/2");
    REQUIRE(rat_str(rat_parse("-4/2")) == "-2");
    REQUIRE(rat_str(rat_parse("7")) == "7");
    REQUIRE(rat_parse("2/4") == Rat(1, 2));
    REQUIRE_THROWS(rat_parse("1/0"));
    REQUIRE_THROWS(rat_parse("x"));
}

TEST_CASE("determinism: identical inputs give identical results")
{
    FinObj a = fin_obj(4), b = fin_obj(3);
    FinMap f{a, b, {0, 1, 2, 0}};
    FinMap g{a, b, {0, 1, 2, 1}};
    FinMap s{b, a, {0, 1, 2}};
    CoeqResult r1 = reflexive_coequalizer(f, g, s);
    CoeqResult r2 = reflexive_coequalizer(f, g, s);
    REQUIRE(r1.proj.table == r2.proj.table);
    REQUIRE(r1.obj.labels == r2.obj.labels);

    RatMap p = rmap(2, 3, mat({{1, 0}, {0, 1}, {0, 0}}));
    RatMap q = rmap(2, 3, mat({{1, 0}, {0, 1}, {1, 1}}));
    RatMap ret = rmap(3, 2, mat({{1, 0, 0}, {0, 1, 0}}));
    REQUIRE(coreflexive_equalizer(p, q, ret).incl.matrix == coreflexive_equalizer(p, q, ret).incl.matrix);
}
