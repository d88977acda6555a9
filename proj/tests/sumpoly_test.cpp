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

#include <algorithm>

#include "semaev/sumpoly.hpp"

using namespace semaev;

namespace {

// Independent relation oracle: all sign/branch combinations of candidate
// points over the quadratic extension, by brute force.
bool relation_exists_brute(const WeierstrassModel& m,
                           const std::vector<FieldElement>& xs) {
    QuadraticExtension ext(m.field);
    WeierstrassModel mt = embed_model(m, ext);
    std::vector<std::vector<CurvePoint>> cand;
    for (const auto& x : xs) {
        std::vector<CurvePoint> c;
        for (const auto& y : y_roots(mt, ext.embed(x))) c.emplace_back(ext.embed(x), y);
        if (c.empty()) return false;  // x is not a curve x-coordinate
        cand.push_back(c);
    }
    std::vector<size_t> idx(xs.size(), 0);
    for (;;) {
        CurvePoint s = CurvePoint::infinity();
        for (size_t i = 0; i < xs.size(); ++i) s = point_add(mt, s, cand[i][idx[i]]);
        if (s.is_infinity()) return true;
        size_t i = 0;
        while (i < xs.size() && ++idx[i] == cand[i].size()) idx[i++] = 0;
        if (i == xs.size()) return false;
    }
}

MultiPoly permuted(const MultiPoly& p, const std::vector<uint32_t>& perm) {
    return p.relabel(p.vars(), perm);
}

}  // namespace

TEST_SUITE_BEGIN("sumpoly");

TEST_CASE("S_2 is X0 - X1") {
    const Field* f = Field::get(7, 1);
    WeierstrassModel m = WeierstrassModel::make_ints(f, {0, 0, 0, 1, 1});
    CHECK(summation_poly(m, 2).to_string() == "X0 - X1");
}

TEST_CASE("S_3 for the all-zero coefficient vector, frozen term map") {
    const Field* f = Field::get(7, 1);
    WeierstrassModel m = cuspidal_model(f);
    MultiPoly s = summation_poly(m, 3);
    MultiPoly want(f, {"X0", "X1", "X2"});
    FieldElement one = f->one(), two = f->from_int(2);
    want.add_term({2, 2, 0}, one);
    want.add_term({2, 0, 2}, one);
    want.add_term({0, 2, 2}, one);
    want.add_term({2, 1, 1}, -two);
    want.add_term({1, 2, 1}, -two);
    want.add_term({1, 1, 2}, -two);
    CHECK(s == want);
}

TEST_CASE("arity caps") {
    const Field* f = Field::get(2, 2);
    WeierstrassModel m = WeierstrassModel::make_ints(f, {1, 0, 0, 0, 1});
    CHECK_THROWS_AS(summation_poly(m, 1), std::invalid_argument);
    CHECK_THROWS_AS(summation_poly(m, 8), std::invalid_argument);
}

TEST_CASE("per-variable degree of S_r is 2^{r-2}") {
    Rng rng(2);
    const Field* f = Field::get(2, 4);
    WeierstrassModel m = random_ordinary_model(f, rng);
    for (uint32_t r : {3u, 4u, 5u}) {
        MultiPoly s = summation_poly(m, r);
        for (uint32_t v = 0; v < r; ++v) CHECK(s.degree_in(v) == (1u << (r - 2)));
    }
}

TEST_CASE("S_r is symmetric under variable permutations") {
    Rng rng(3);
    const Field* f = Field::get(2, 3);
    WeierstrassModel m = random_ordinary_model(f, rng);
    for (uint32_t r : {3u, 4u, 5u}) {
        MultiPoly s = summation_poly(m, r);
        std::vector<uint32_t> perm(r);
        for (uint32_t i = 0; i < r; ++i) perm[i] = i;
        // all adjacent transpositions + full reversal generate enough evidence
        for (uint32_t i = 0; i + 1 < r; ++i) {
            std::swap(perm[i], perm[i + 1]);
            CHECK(permuted(s, perm) == s);
            std::swap(perm[i], perm[i + 1]);
        }
        std::reverse(perm.begin(), perm.end());
        CHECK(permuted(s, perm) == s);
    }
}

TEST_CASE("swapping the resultant factors changes S_4 by a nonzero scalar only") {
    Rng rng(5);
    const Field* f = Field::get(5, 1);
    WeierstrassModel m = random_smooth_model(f, rng);
    MultiPoly s4 = summation_poly(m, 4);
    std::vector<std::string> ext = {"X0", "X1", "X2", "X3", "T"};
    MultiPoly s3a(f, ext), s3b(f, ext);
    {
        MultiPoly s3 = summation_poly(m, 3);
        s3a = s3.relabel(ext, {0, 1, 4});
        s3b = s3.relabel(ext, {2, 3, 4});
    }
    MultiPoly swapped = resultant(s3b, s3a, 4).relabel(
        {"X0", "X1", "X2", "X3"}, {0, 1, 2, 3, 0});
    // find the scalar from leading terms
    auto lead = *s4.terms().rbegin();
    FieldElement ratio = swapped.coefficient(lead.first) / lead.second;
    CHECK_FALSE(ratio.is_zero());
    CHECK(swapped == s4.scaled(ratio));
}

TEST_CASE("Prop-1 style equivalence, exhaustive for r=3,4 on small curves") {
    Rng rng(8);
    for (auto [p, n] : {std::pair<uint64_t, uint32_t>{2, 2}, {2, 3}, {5, 1}}) {
        const Field* f = Field::get(p, n);
        WeierstrassModel m = random_smooth_model(f, rng);
        for (uint32_t r : {3u, 4u}) {
            MultiPoly s = summation_poly(m, r);
            uint64_t q = f->order();
            uint64_t total = 1;
            for (uint32_t i = 0; i < r; ++i) total *= q;
            for (uint64_t code = 0; code < total; ++code) {
                uint64_t c = code;
                std::vector<FieldElement> xs;
                for (uint32_t i = 0; i < r; ++i) {
                    xs.push_back(f->from_uint(c % q));
                    c /= q;
                }
                bool vanish = s.evaluate(xs).is_zero();
                CHECK(vanish == relation_exists_brute(m, xs));
                // the cascade agrees with the symbolic evaluation
                CHECK(eval_summation(m, xs).is_zero() == vanish);
            }
        }
    }
}

TEST_CASE("cascade evaluation equals symbolic evaluation (r=4,5, both paths)") {
    Rng rng(13);
    // GF(7): r=5 needs 9 interpolation nodes > 7, exercising the Bareiss path;
    // GF(16) uses interpolation.
    for (auto [p, n] : {std::pair<uint64_t, uint32_t>{7, 1}, {2, 4}}) {
        const Field* f = Field::get(p, n);
        WeierstrassModel m = random_smooth_model(f, rng);
        for (uint32_t r : {4u, 5u}) {
            MultiPoly s = summation_poly(m, r);
            for (int t = 0; t < 40; ++t) {
                std::vector<FieldElement> xs;
                for (uint32_t i = 0; i < r; ++i) xs.push_back(f->random_element(rng));
                CHECK(eval_summation(m, xs) == s.evaluate(xs));
            }
        }
    }
}

TEST_CASE("verify_vanishing finds witnesses for genuine relations") {
    Rng rng(17);
    for (auto [p, n] : {std::pair<uint64_t, uint32_t>{2, 4}, {5, 1}}) {
        const Field* f = Field::get(p, n);
        WeierstrassModel m = random_smooth_model(f, rng);
        for (int t = 0; t < 10; ++t) {
            CurvePoint P = random_point(m, rng);
            CurvePoint Q = random_point(m, rng);
            CurvePoint R = point_add(m, P, Q);
            if (P.is_infinity() || Q.is_infinity() || R.is_infinity()) continue;
            std::vector<FieldElement> xs = {P.x(), Q.x(), R.x()};
            auto rep = verify_vanishing_by_points(m, xs);
            CHECK(rep.vanishes);
            CHECK(rep.witness_found);
            CHECK(rep.consistent());
            // witness actually sums to zero on the extension curve
            QuadraticExtension ext(m.field);
            WeierstrassModel mt = embed_model(m, ext);
            CurvePoint s = CurvePoint::infinity();
            for (const auto& w : rep.points) s = point_add(mt, s, w);
            CHECK(s.is_infinity());
        }
    }
}

TEST_CASE("verify_vanishing refutes r=2 with distinct inputs") {
    const Field* f = Field::get(2, 3);
    Rng rng(19);
    WeierstrassModel m = random_smooth_model(f, rng);
    CurvePoint P = random_point(m, rng);
    CurvePoint Q = random_point(m, rng);
    if (P.x() != Q.x()) {
        auto rep = verify_vanishing_by_points(m, {P.x(), Q.x()});
        CHECK_FALSE(rep.vanishes);
        CHECK_FALSE(rep.witness_found);
        CHECK(rep.consistent());
    }
}

TEST_CASE("cuspidal factorization check over GF(7): (1,2,3)") {
    const Field* f = Field::get(7, 1);
    // 1 + 2 - 3 = 0, and the transformed inputs are (1, 2, 4)
    auto chk = cuspidal_factorization_check(f, f->from_uint(1), f->from_uint(2),
                                            f->from_uint(3));
    CHECK(chk.equal);
    CHECK(chk.vanishes);
    CHECK(chk.relation_exists);
    CHECK(f->from_uint(4) == (f->from_uint(3) * f->from_uint(3)).inv());
    CHECK(eval_summation(cuspidal_model(f),
                         {f->from_uint(1), f->from_uint(2), f->from_uint(4)})
              .is_zero());
}

TEST_CASE("nodal factorization check over GF(11): (2,3,6)") {
    const Field* f = Field::get(11, 1);
    // x2 - x0*x1 = 6 - 6 = 0
    auto chk = nodal_factorization_check(f, f->from_uint(2), f->from_uint(3),
                                         f->from_uint(6));
    CHECK(chk.equal);
    CHECK(chk.vanishes);
    CHECK(chk.relation_exists);
}

TEST_CASE("degenerate product identities hold exactly on all valid inputs") {
    for (uint64_t p : {5ULL, 7ULL, 11ULL}) {
        const Field* f = Field::get(p, 1);
        for (uint64_t i = 2; i < p; ++i)
            for (uint64_t j = 2; j < p; ++j)
                for (uint64_t k = 2; k < p; ++k) {
                    auto nc = nodal_factorization_check(f, f->from_uint(i),
                                                        f->from_uint(j), f->from_uint(k));
                    CHECK(nc.equal);
                    CHECK(nc.vanishes == nc.relation_exists);
                }
        for (uint64_t i = 1; i < p; ++i)
            for (uint64_t j = 1; j < p; ++j)
                for (uint64_t k = 1; k < p; ++k) {
                    auto cc = cuspidal_factorization_check(f, f->from_uint(i),
                                                           f->from_uint(j), f->from_uint(k));
                    CHECK(cc.equal);
                    CHECK(cc.vanishes == cc.relation_exists);
                }
    }
}

TEST_CASE("char-2 cuspidal vanishing is the reciprocal-sum criterion") {
    // Over GF(2^n) the product form degenerates: S_{0,3}(a0,a1,a2) = 0 exactly
    // when 1/a0 + 1/a1 + 1/a2 = 0. (Equivalently: the +-x sum criterion after
    // substituting a_i = 1/x_i^2.)
    for (uint32_t n : {2u, 3u, 4u}) {
        const Field* f = Field::get(2, n);
        WeierstrassModel m = cuspidal_model(f);
        for (uint64_t i = 1; i < f->order(); ++i)
            for (uint64_t j = 1; j < f->order(); ++j)
                for (uint64_t k = 1; k < f->order(); ++k) {
                    FieldElement a = f->from_uint(i), b = f->from_uint(j),
                                 c = f->from_uint(k);
                    bool vanish = eval_summation(m, {a, b, c}).is_zero();
                    bool recip = (a.inv() + b.inv() + c.inv()).is_zero();
                    CHECK(vanish == recip);
                }
    }
    // and for r=4 on a sample
    const Field* f = Field::get(2, 3);
    WeierstrassModel m = cuspidal_model(f);
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        std::vector<FieldElement> a;
        for (int i = 0; i < 4; ++i) {
            FieldElement x = f->random_element(rng);
            if (x.is_zero()) x = f->one();
            a.push_back(x);
        }
        bool vanish = eval_summation(m, a).is_zero();
        bool recip = (a[0].inv() + a[1].inv() + a[2].inv() + a[3].inv()).is_zero();
        CHECK(vanish == recip);
    }
}

TEST_SUITE_END();
