/*
   Copyright 2026 the semaev-tools authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <set>

#include "semaev/descent.hpp"
#include "semaev/sumpoly.hpp"

using namespace semaev;

namespace {

MultiPoly random_reduced_poly(const Field* f, const std::vector<std::string>& vars,
                              uint32_t max_deg, uint32_t nterms, Rng& rng) {
    MultiPoly p(f, vars);
    for (uint32_t t = 0; t < nterms; ++t) {
        Exponents e(vars.size());
        for (auto& x : e) x = static_cast<uint32_t>(rng.below(max_deg + 1));
        p.add_term(e, f->random_element(rng));
    }
    return reduce_r1(p);
}

MultiPoly spec_t(const WeierstrassModel& m, const CurvePoint& p) {
    MultiPoly s3 = summation_poly(m, 3);
    return s3.substitute_const(2, p.x()).relabel({"X1", "X2"}, {0, 1, 0});
}

// Evaluate a descended component at the coordinate expansion of points.
uint64_t eval_component(const MultiPoly& comp,
                        const std::vector<std::vector<uint64_t>>& coords) {
    std::vector<FieldElement> pt;
    const Field* fp = comp.field();
    for (const auto& c : coords)
        for (uint64_t v : c) pt.push_back(fp->from_uint(v));
    return comp.evaluate(pt).coord(0);
}

}  // namespace

TEST_SUITE_BEGIN("descent");

TEST_CASE("descent of a linear polynomial recombines exactly") {
    const Field* f = Field::get(2, 3);
    Basis alpha = power_basis(f);
    MultiPoly x1 = MultiPoly::variable(f, {"X1"}, 0);
    auto d = descend(x1, alpha);
    CHECK(d.components.size() == 3);
    CHECK(recombine(d, alpha) == d.r3);
    // [X1]_i are the coordinate projections: X1_i exactly
    for (uint32_t i = 0; i < 3; ++i) {
        MultiPoly want(Field::get(2, 1), d.vars);
        Exponents e(3, 0);
        e[i] = 1;
        want.add_term(e, Field::get(2, 1)->one());
        CHECK(d.components[i] == want);
    }
}

TEST_CASE("descend X1^2 over GF(4): solutions correspond pointwise") {
    const Field* f = Field::get(2, 2);
    Basis alpha = power_basis(f);
    MultiPoly p(f, {"X1"});
    p.add_term({2}, f->one());
    auto d = descend(p, alpha);
    for (uint64_t v = 0; v < 4; ++v) {
        FieldElement a = f->from_uint(v);
        bool zero_src = p.evaluate({a}).is_zero();
        auto coords = a.coords();
        bool zero_desc = true;
        for (const auto& comp : d.components)
            if (eval_component(comp, {coords}) != 0) zero_desc = false;
        CHECK(zero_src == zero_desc);
    }
}

TEST_CASE("descent solution-set bijection on random systems (p^n <= 16, r <= 2)") {
    Rng rng(41);
    for (auto [p, n] : {std::pair<uint64_t, uint32_t>{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
        const Field* f = Field::get(p, n);
        Basis alpha = power_basis(f);
        for (int trial = 0; trial < 4; ++trial) {
            MultiPoly poly =
                random_reduced_poly(f, {"X1", "X2"}, 3, 5, rng);
            auto d = descend(poly, alpha);
            CHECK(recombine(d, alpha) == d.r3);
            for (uint64_t i = 0; i < f->order(); ++i) {
                for (uint64_t j = 0; j < f->order(); ++j) {
                    FieldElement a = f->from_uint(i), b = f->from_uint(j);
                    bool zero_src = poly.evaluate({a, b}).is_zero();
                    bool zero_desc = true;
                    for (const auto& comp : d.components)
                        if (eval_component(comp, {a.coords(), b.coords()}) != 0)
                            zero_desc = false;
                    CHECK(zero_src == zero_desc);
                }
            }
        }
    }
}

TEST_CASE("descent under a random basis still recombines") {
    Rng rng(43);
    const Field* f = Field::get(2, 4);
    for (int t = 0; t < 5; ++t) {
        Basis alpha = random_basis(f, rng);
        MultiPoly poly = random_reduced_poly(f, {"X1", "X2"}, 2, 6, rng);
        auto d = descend(poly, alpha);
        CHECK(recombine(d, alpha) == d.r3);
    }
}

TEST_CASE("product descent recombines to the product modulo field equations") {
    Rng rng(47);
    const Field* f = Field::get(2, 3);
    Basis alpha = power_basis(f);
    MultiPoly a = random_reduced_poly(f, {"X1", "X2"}, 2, 4, rng);
    MultiPoly b = random_reduced_poly(f, {"X1", "X2"}, 2, 4, rng);
    auto da = descend(a, alpha), db = descend(b, alpha), dab = descend(a * b, alpha);
    MultiPoly prod = (recombine(da, alpha) * recombine(db, alpha))
                         .reduce_mod_field_equations(f->p());
    CHECK(prod == recombine(dab, alpha));
}

TEST_CASE("ring trace basics on GF(4)") {
    const Field* f = Field::get(2, 2);
    // constant c: trace is the field trace of c
    MultiPoly c(f, {"X"});
    c.add_term({0}, f->gen());
    MultiPoly tc = ring_trace(c);
    CHECK(tc.constant_term() == f->one());  // Tr(u) = 1
    // f = X: Tr = X + X^2
    MultiPoly x = MultiPoly::variable(f, {"X"}, 0);
    MultiPoly want(f, {"X"});
    want.add_term({1}, f->one());
    want.add_term({2}, f->one());
    CHECK(ring_trace(x) == want);
}

TEST_CASE("ring trace properties: evaluation compatibility, Frobenius, value field") {
    Rng rng(53);
    for (auto [p, n] : {std::pair<uint64_t, uint32_t>{2, 3}, {3, 2}, {2, 4}}) {
        const Field* f = Field::get(p, n);
        for (int t = 0; t < 5; ++t) {
            MultiPoly poly = random_reduced_poly(f, {"X"}, 4, 5, rng);
            MultiPoly tr = ring_trace(poly);
            MultiPoly tr_frob = ring_trace(reduce_r1(poly.frobenius_lift()));
            CHECK(tr == tr_frob);  // Tr(f^p) = Tr(f)
            for (uint64_t i = 0; i < f->order(); ++i) {
                FieldElement a = f->from_uint(i);
                FieldElement val = tr.evaluate({a});
                // Tr(f)(a) = Tr(f(a)), and the value lies in the prime field
                CHECK(val.coord(0) == f->trace(poly.evaluate({a})));
                for (uint32_t k = 1; k < n; ++k) CHECK(val.coord(k) == 0);
                if (poly.evaluate({a}).is_zero()) CHECK(val.is_zero());
            }
        }
    }
}

TEST_CASE("trace-split identity: c = 1 and c = 0 specializations") {
    Rng rng(59);
    const Field* f = Field::get(2, 3);
    Basis alpha = power_basis(f);
    MultiPoly poly = random_reduced_poly(f, {"X1", "X2"}, 2, 5, rng);
    CHECK(trace_split_check(poly, f->one(), alpha).ok());
    auto z = trace_split_check(poly, f->zero(), alpha);
    CHECK(z.identity_holds);
}

TEST_CASE("trace-split identity on random data, multiple fields and bases") {
    Rng rng(61);
    for (auto [p, n] : {std::pair<uint64_t, uint32_t>{2, 3}, {2, 4}, {3, 2}}) {
        const Field* f = Field::get(p, n);
        for (int t = 0; t < 4; ++t) {
            Basis alpha = (t % 2) ? random_basis(f, rng) : power_basis(f);
            MultiPoly poly = random_reduced_poly(f, {"X1", "X2"}, 2, 5, rng);
            FieldElement c = f->random_element(rng);
            if (c.is_zero()) c = f->one();
            CHECK(trace_split_check(poly, c, alpha).ok());
        }
    }
}

TEST_CASE("trace quotient identity: exhaustive and symbolic modes agree") {
    Rng rng(67);
    for (uint32_t n : {3u, 4u, 5u}) {
        const Field* f = Field::get(2, n);
        for (int t = 0; t < 3; ++t) {
            WeierstrassModel m = random_ordinary_model(f, rng);
            CurvePoint p = random_point(m, rng);
            if (scalar_mul(m, 2, p).is_infinity()) continue;
            auto ex = trace_quotient_check(m, p, TraceCheckMode::Exhaustive);
            auto sy = trace_quotient_check(m, p, TraceCheckMode::Symbolic);
            CHECK(ex.exhaustive_ran);
            CHECK(sy.symbolic_ran);
            CHECK(ex.ok());
            CHECK(sy.ok());
            CHECK(ex.trace_zero_on_variety);
        }
    }
}

TEST_CASE("trace quotient identity rejects 2-torsion and non-ordinary input") {
    Rng rng(71);
    const Field* f = Field::get(2, 3);
    WeierstrassModel m = random_ordinary_model(f, rng);
    // find a 2-torsion point: x with a1 x + a3 = 0
    FieldElement x2 = m.a3 / m.a1;
    auto ys = y_roots(m, x2);
    if (!ys.empty()) {
        CurvePoint tor = make_point(m, x2, ys[0]);
        CHECK_THROWS_AS(trace_quotient_check(m, tor), std::invalid_argument);
    }
    CHECK_THROWS_AS(trace_quotient_check(m, CurvePoint::infinity()), std::invalid_argument);
}

TEST_CASE("descended combination collapses to degree 1 with the right constant") {
    Rng rng(73);
    for (uint32_t n : {3u, 4u, 5u, 6u}) {
        const Field* f = Field::get(2, n);
        for (int t = 0; t < 3; ++t) {
            WeierstrassModel m = random_ordinary_model(f, rng);
            CurvePoint p = random_point(m, rng);
            if (scalar_mul(m, 2, p).is_infinity()) continue;
            // at least 3 distinct bases per trial curve
            for (int bt = 0; bt < 3; ++bt) {
                Basis alpha = bt == 0 ? power_basis(f) : random_basis(f, rng);
                auto rep = descent_combination_check(m, p, alpha);
                CHECK(rep.equal);
                CHECK(rep.lhs_degree <= 1);
                CHECK(rep.constant == trace_morphism(m, p));
                // generic components are quadratic while the combination drops
                auto dt = descend(spec_t(m, p), alpha);
                bool some_quadratic = false;
                for (const auto& cpn : dt.components)
                    if (cpn.total_degree() == 2) some_quadratic = true;
                CHECK(some_quadratic);
            }
        }
    }
}

TEST_SUITE_END();
