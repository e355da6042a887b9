#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kosmos/errors.hpp"
#include "kosmos/finset.hpp"
#include "kosmos/lawcheck.hpp"

namespace kosmos {

/* A group object on a finite carrier.  The comonoid half (diagonal and
   terminal map) is forced by cartesianness and is not stored. */

struct FinGroupObj {
    FinObj carrier;
    FinMap mul;        // carrier (x) carrier -> carrier
    std::size_t unit;  // index of the neutral element
    FinMap inv;        // carrier -> carrier
};

inline FinMap unit_map(const FinGroupObj& g) { return point(g.carrier, g.unit); }

inline FinMap counit_map(const FinGroupObj& g) { return terminal_map(g.carrier); }

inline FinMap comul_map(const FinGroupObj& g) { return diagonal(g.carrier); }

inline std::size_t mul_at(const FinGroupObj& g, std::size_t i, std::size_t j)
{
    return g.mul.table[i * g.carrier.size + j];
}

inline std::size_t inv_at(const FinGroupObj& g, std::size_t i) { return g.inv.table[i]; }

inline std::vector<Report> group_axioms(const FinGroupObj& g)
{
    const FinObj& p = g.carrier;
    const FinMap id = identity(p);
    const FinMap u = unit_map(g);
    const FinMap e = counit_map(g);
    const FinMap dup = comul_map(g);
    std::vector<Report> reps;
    reps.push_back(check_equation(make_eq(
        "associativity", compose(g.mul, tensor_map(g.mul, id)),
        compose(g.mul, tensor_map(id, g.mul), coherence(Coherence::Assoc, p, p, p)),
        "group.assoc")));
    reps.push_back(check_equation(make_eq(
        "left unit", compose(g.mul, tensor_map(u, id), coherence(Coherence::LeftUnit, p)), id,
        "group.unit-left")));
    reps.push_back(check_equation(make_eq(
        "right unit", compose(g.mul, tensor_map(id, u), coherence(Coherence::RightUnit, p)), id,
        "group.unit-right")));
    reps.push_back(check_equation(make_eq(
        "left inverse", compose(g.mul, tensor_map(g.inv, id), dup), compose(u, e),
        "group.inv-left")));
    reps.push_back(check_equation(make_eq(
        "right inverse", compose(g.mul, tensor_map(id, g.inv), dup), compose(u, e),
        "group.inv-right")));
    return reps;
}

struct GroupValidation {
    std::vector<Report> reports;
    std::optional<FinGroupObj> object;  // engaged iff every report passed
};

inline GroupValidation validate_group(const std::vector<std::vector<std::size_t>>& table,
                                      std::size_t unit, const std::vector<std::size_t>& inv,
                                      std::vector<std::string> labels = {})
{
    const std::size_t n = table.size();
    if (n == 0)
        throw shape_mismatch("validate_group: empty multiplication table");
    if (!labels.empty() && labels.size() != n)
        throw shape_mismatch("validate_group: label count != order");
    if (unit >= n || inv.size() != n)
        throw shape_mismatch("validate_group: unit or inverse table out of shape");

    FinGroupObj g;
    g.carrier = FinObj{n, std::move(labels)};
    g.mul = FinMap{tensor_obj(g.carrier, g.carrier), g.carrier, {}};
    g.mul.table.reserve(n * n);
    for (const auto& row : table) {
        if (row.size() != n)
            throw shape_mismatch("validate_group: multiplication table is not square");
        for (std::size_t v : row) {
            if (v >= n)
                throw shape_mismatch("validate_group: table entry out of range");
            g.mul.table.push_back(v);
        }
    }
    g.unit = unit;
    g.inv = FinMap{g.carrier, g.carrier, inv};
    check_map(g.inv, "validate_group");

    GroupValidation res{group_axioms(g), std::nullopt};
    if (all_passed(res.reports))
        res.object = std::move(g);
    return res;
}

/* Convolution on maps c -> pi, where c carries its diagonal comonoid. */
inline FinMap convolution(const FinMap& f, const FinMap& g, const FinGroupObj& pi)
{
    if (!same_obj(f.dom, g.dom) || !same_obj(f.cod, pi.carrier) || !same_obj(g.cod, pi.carrier))
        throw shape_mismatch("convolution: maps must share a domain and land in the group");
    return compose(pi.mul, tensor_map(f, g), diagonal(f.dom));
}

inline FinMap convolution_unit(const FinObj& c, const FinGroupObj& pi)
{
    return compose(unit_map(pi), terminal_map(c));
}

inline FinMap convolution_inverse(const FinMap& f, const FinGroupObj& pi)
{
    return compose(pi.inv, f);
}

/* The group of all maps c -> pi under convolution.  Element k decodes to the
   base-|pi| digits of k, position 0 most significant, matching the row-major
   tensor encoding. */

struct HomGroup {
    FinObj dom;
    std::vector<FinMap> elements;
    FinGroupObj group;
};

namespace detail {

inline std::size_t hom_encode(const FinMap& f, std::size_t n)
{
    std::size_t k = 0;
    for (std::size_t v : f.table)
        k = k * n + v;
    return k;
}

}

inline HomGroup hom_group(const FinObj& c, const FinGroupObj& pi)
{
    const std::size_t n = pi.carrier.size;
    std::size_t total = 1;
    for (std::size_t i = 0; i < c.size; ++i)
        total *= n;

    HomGroup res;
    res.dom = c;
    res.elements.reserve(total);
    for (std::size_t k = 0; k < total; ++k) {
        FinMap f{c, pi.carrier, std::vector<std::size_t>(c.size)};
        std::size_t rem = k;
        for (std::size_t i = c.size; i-- > 0;) {
            f.table[i] = rem % n;
            rem /= n;
        }
        res.elements.push_back(std::move(f));
    }

    res.group.carrier = fin_obj(total);
    res.group.mul = FinMap{tensor_obj(res.group.carrier, res.group.carrier), res.group.carrier, {}};
    res.group.mul.table.reserve(total * total);
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b)
            res.group.mul.table.push_back(
                detail::hom_encode(convolution(res.elements[a], res.elements[b], pi), n));
    res.group.unit = detail::hom_encode(convolution_unit(c, pi), n);
    res.group.inv = FinMap{res.group.carrier, res.group.carrier, {}};
    res.group.inv.table.reserve(total);
    for (std::size_t a = 0; a < total; ++a)
        res.group.inv.table.push_back(detail::hom_encode(convolution_inverse(res.elements[a], pi), n));
    return res;
}

struct FinGroupMor {
    FinGroupObj src, dst;
    FinMap map;  // src.carrier -> dst.carrier
};

inline std::vector<Report> check_group_mor(const FinGroupMor& f)
{
    std::vector<Report> reps;
    reps.push_back(check_equation(make_eq(
        "preserves multiplication", compose(f.map, f.src.mul),
        compose(f.dst.mul, tensor_map(f.map, f.map)), "groupmor.mul")));
    reps.push_back(check_equation(make_eq(
        "preserves unit", compose(f.map, unit_map(f.src)), unit_map(f.dst), "groupmor.unit")));
    return reps;
}

inline FinGroupMor identity_mor(const FinGroupObj& g)
{
    return FinGroupMor{g, g, identity(g.carrier)};
}

inline FinGroupMor compose_mor(const FinGroupMor& f, const FinGroupMor& g)
{
    return FinGroupMor{g.src, f.dst, compose(f.map, g.map)};
}

/* Conjugation by a point, written out as the composite
   mul . (mul (x) inv) . (theta (x) id (x) theta) over the unit insertions. */
inline FinGroupMor inner_auto(const FinGroupObj& pi, std::size_t theta)
{
    if (theta >= pi.carrier.size)
        throw KosmosError("InvalidPoint",
                          "theta index " + std::to_string(theta) + " is out of range");
    const FinObj& p = pi.carrier;
    const FinMap th = point(p, theta);
    const FinMap sigma =
        compose(pi.mul, tensor_map(pi.mul, pi.inv),
                tensor_map(tensor_map(th, identity(p)), th),
                tensor_map(coherence(Coherence::LeftUnit, p), identity(fin_kappa())),
                coherence(Coherence::RightUnit, p));
    return FinGroupMor{pi, pi, sigma};
}

/* A 2-cell theta: f1 => f2 between parallel morphisms into pi is a point of pi
   intertwining them under convolution. */

struct FinTwoCell {
    std::size_t theta;
    FinGroupMor f1, f2;
};

inline Report check_two_cell(const FinTwoCell& t)
{
    if (!same_obj(t.f1.src.carrier, t.f2.src.carrier) ||
        !same_obj(t.f1.dst.carrier, t.f2.dst.carrier))
        throw shape_mismatch("check_two_cell: 1-cells are not parallel");
    const FinGroupObj& pi = t.f1.dst;
    const FinObj& c = t.f1.src.carrier;
    const FinMap th = compose(point(pi.carrier, t.theta), terminal_map(c));
    Report rep = check_equation(make_eq("two-cell intertwining",
                                        convolution(th, t.f1.map, pi),
                                        convolution(t.f2.map, th, pi), "twocell.star"));
    if (!rep.passed)
        return rep;
    return check_equation(make_eq("two-cell conjugation form",
                                  compose(inner_auto(pi, t.theta).map, t.f1.map), t.f2.map,
                                  "twocell.sigma"));
}

inline FinTwoCell compose_two_cells(const FinTwoCell& t1, const FinTwoCell& t2)
{
    // vertical: t1: f1 => f2, t2: f2 => f3
    if (!equals(t1.f2.map, t2.f1.map))
        throw KosmosError("NotComposable", "middle 1-cells disagree");
    const FinGroupObj& pi = t1.f1.dst;
    return FinTwoCell{mul_at(pi, t2.theta, t1.theta), t1.f1, t2.f2};
}

inline FinTwoCell horizontal_compose(const FinTwoCell& t, const FinTwoCell& tp)
{
    // t: f1 => f2 out of pi', tp: f1' => f2' into pi'
    if (!same_obj(t.f1.src.carrier, tp.f1.dst.carrier))
        throw KosmosError("NotComposable", "2-cells are not horizontally adjacent");
    const FinGroupObj& pi = t.f1.dst;
    const std::size_t left = mul_at(pi, t.theta, t.f1.map.table[tp.theta]);
    const std::size_t right = mul_at(pi, t.f2.map.table[tp.theta], t.theta);
    if (left != right)
        throw KosmosError("NotComposable", "the two horizontal composite formulas disagree");
    return FinTwoCell{left, compose_mor(t.f1, tp.f1), compose_mor(t.f2, tp.f2)};
}

}
