#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "kosmos/group.hpp"
#include "kosmos/hopf.hpp"

namespace kosmos {

/* Stock small instances used across the test roster and the bundled data.
   Builders assemble the structures directly; axiom validation is a separate
   concern for validate_group / validate_hopf callers. */

namespace detail {

inline FinGroupObj make_group(std::size_t n, std::vector<std::size_t> mul_table,
                              std::size_t unit, std::vector<std::size_t> inv,
                              std::vector<std::string> labels)
{
    FinGroupObj g;
    g.carrier = FinObj{n, std::move(labels)};
    g.mul = FinMap{tensor_obj(g.carrier, g.carrier), g.carrier, std::move(mul_table)};
    g.unit = unit;
    g.inv = FinMap{g.carrier, g.carrier, std::move(inv)};
    return g;
}

}

inline FinGroupObj cyclic(std::size_t n)
{
    std::vector<std::size_t> table(n * n);
    std::vector<std::size_t> inv(n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = (i + j) % n;
        inv[i] = (n - i) % n;
        labels[i] = std::to_string(i);
    }
    return detail::make_group(n, std::move(table), 0, std::move(inv), std::move(labels));
}

inline FinGroupObj trivial_group() { return cyclic(1); }

inline FinGroupObj product(const FinGroupObj& a, const FinGroupObj& b)
{
    const std::size_t an = a.carrier.size, bn = b.carrier.size, n = an * bn;
    std::vector<std::size_t> table(n * n);
    std::vector<std::size_t> inv(n);
    for (std::size_t i1 = 0; i1 < an; ++i1)
        for (std::size_t j1 = 0; j1 < bn; ++j1) {
            const std::size_t p = i1 * bn + j1;
            inv[p] = inv_at(a, i1) * bn + inv_at(b, j1);
            for (std::size_t i2 = 0; i2 < an; ++i2)
                for (std::size_t j2 = 0; j2 < bn; ++j2)
                    table[p * n + i2 * bn + j2] = mul_at(a, i1, i2) * bn + mul_at(b, j1, j2);
        }
    return detail::make_group(n, std::move(table), a.unit * bn + b.unit, std::move(inv),
                              tensor_obj(a.carrier, b.carrier).labels);
}

inline FinGroupObj klein_four() { return product(cyclic(2), cyclic(2)); }

inline FinGroupObj symmetric3()
{
    // permutations of {0,1,2} in lexicographic one-line order, composed as functions
    static const std::array<std::array<std::size_t, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    auto index_of = [&](const std::array<std::size_t, 3>& p) {
        for (std::size_t k = 0; k < perms.size(); ++k)
            if (perms[k] == p)
                return k;
        return perms.size();
    };
    std::vector<std::size_t> table(36);
    std::vector<std::size_t> inv(6);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            std::array<std::size_t, 3> pq{};
            for (std::size_t t = 0; t < 3; ++t)
                pq[t] = perms[i][perms[j][t]];
            table[i * 6 + j] = index_of(pq);
        }
        std::array<std::size_t, 3> pinv{};
        for (std::size_t t = 0; t < 3; ++t)
            pinv[perms[i][t]] = t;
        inv[i] = index_of(pinv);
    }
    return detail::make_group(6, std::move(table), 0, std::move(inv),
                              {"e", "(12)", "(01)", "(012)", "(021)", "(02)"});
}

/* Functions on a finite group, on the idempotent basis e_g: pointwise product,
   all-ones unit, comul dual to the group law, antipode dual to inversion. */
inline RatHopfObj function_hopf(const FinGroupObj& g)
{
    const std::size_t n = g.carrier.size;
    Matrix mul = zero_matrix(n, n * n);
    Matrix unit = zero_matrix(n, 1);
    Matrix comul = zero_matrix(n * n, n);
    Matrix counit = zero_matrix(1, n);
    Matrix antipode = zero_matrix(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        mul[a][a * n + a] = 1;
        unit[a][0] = 1;
        antipode[inv_at(g, a)][a] = 1;
        for (std::size_t b = 0; b < n; ++b)
            comul[a * n + b][mul_at(g, a, b)] = 1;
    }
    counit[0][g.unit] = 1;
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a)
        labels[a] = "e_" + (g.carrier.labels.empty() ? std::to_string(a) : g.carrier.labels[a]);
    return assemble_hopf(n, std::move(mul), std::move(unit), std::move(comul), std::move(counit),
                         std::move(antipode), std::move(labels));
}

inline RatHopfObj kappa_hopf()
{
    return assemble_hopf(1, {{Rat(1)}}, {{Rat(1)}}, {{Rat(1)}}, {{Rat(1)}}, {{Rat(1)}});
}

/* The rank 2 algebra with basis {1, x} and x^2 = alpha + beta x. */
inline CommAlgObj quadratic_alg(const Rat& alpha, const Rat& beta)
{
    CommAlgObj a;
    a.carrier = RatObj{2, {"1", "x"}};
    Matrix mul = zero_matrix(2, 4);
    mul[0][0] = 1;
    mul[1][1] = 1;
    mul[1][2] = 1;
    mul[0][3] = alpha;
    mul[1][3] = beta;
    a.mul = RatMap{tensor_obj(a.carrier, a.carrier), a.carrier, std::move(mul)};
    a.unit = RatMap{rat_kappa(), a.carrier, {{Rat(1)}, {Rat(0)}}};
    return a;
}

inline CommAlgObj sqrt2_alg() { return quadratic_alg(Rat(2), Rat(0)); }

inline CommAlgObj split_pair_alg() { return quadratic_alg(Rat(0), Rat(1)); }

inline CommAlgObj dual_numbers_alg() { return quadratic_alg(Rat(0), Rat(0)); }

/* The algebra map dual to a group homomorphism: e_a pulls back to the
   indicator of its fiber. */
inline AffMor function_hopf_mor(const FinGroupMor& f)
{
    RatHopfObj s = function_hopf(f.src);
    RatHopfObj d = function_hopf(f.dst);
    Matrix m = zero_matrix(s.carrier.dim, d.carrier.dim);
    for (std::size_t x = 0; x < f.map.table.size(); ++x)
        m[x][f.map.table[x]] = 1;
    RatMap alg{d.carrier, s.carrier, std::move(m)};
    return AffMor{std::move(s), std::move(d), std::move(alg)};
}

/* The evaluation character at a group element, as a row on function_hopf. */
inline RatMap evaluation_point(const RatHopfObj& h, std::size_t g)
{
    if (g >= h.carrier.dim)
        throw KosmosError("InvalidPoint", "element index out of range");
    Matrix row = zero_matrix(1, h.carrier.dim);
    row[0][g] = 1;
    return RatMap{h.carrier, rat_kappa(), std::move(row)};
}

}
