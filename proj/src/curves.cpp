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

#include "semaev/curves.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "semaev/upoly.hpp"

namespace semaev {

namespace {

uint64_t isqrt_u64(uint64_t v) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::vector<uint64_t> factorize(uint64_t v) {
    std::vector<uint64_t> primes;
    for (uint64_t d = 2; d * d <= v; ++d) {
        if (v % d) continue;
        primes.push_back(d);
        while (v % d == 0) v /= d;
    }
    if (v > 1) primes.push_back(v);
    return primes;
}

}  // namespace

WeierstrassModel WeierstrassModel::make(const Field* f,
                                        const std::array<FieldElement, 5>& a) {
    for (const auto& c : a)
        if (c.field() != f) throw std::invalid_argument("curve coefficient field mismatch");
    WeierstrassModel m;
    m.field = f;
    m.a1 = a[0];
    m.a2 = a[1];
    m.a3 = a[2];
    m.a4 = a[3];
    m.a6 = a[4];
    FieldElement two = f->from_int(2), four = f->from_int(4);
    m.b2 = m.a1 * m.a1 + four * m.a2;
    m.b4 = m.a1 * m.a3 + two * m.a4;
    m.b6 = m.a3 * m.a3 + four * m.a6;
    m.b8 = m.a1 * m.a1 * m.a6 - m.a1 * m.a3 * m.a4 + m.a2 * m.a3 * m.a3 +
           four * m.a2 * m.a6 - m.a4 * m.a4;
    m.c4 = m.b2 * m.b2 - f->from_int(24) * m.b4;
    m.disc = -(m.b2 * m.b2 * m.b8) - f->from_int(8) * m.b4 * m.b4 * m.b4 -
             f->from_int(27) * m.b6 * m.b6 + f->from_int(9) * m.b2 * m.b4 * m.b6;
    if (!m.disc.is_zero())
        m.kind = Kind::Smooth;
    else if (!m.c4.is_zero())
        m.kind = Kind::Nodal;
    else
        m.kind = Kind::Cuspidal;
    return m;
}

WeierstrassModel WeierstrassModel::make_ints(const Field* f,
                                             const std::array<int64_t, 5>& a) {
    return make(f, {f->from_int(a[0]), f->from_int(a[1]), f->from_int(a[2]),
                    f->from_int(a[3]), f->from_int(a[4])});
}

bool WeierstrassModel::ordinary_char2() const {
    return field->p() == 2 && !a1.is_zero();
}

const FieldElement& CurvePoint::x() const {
    if (inf_) throw std::invalid_argument("x() of the point at infinity");
    return x_;
}

const FieldElement& CurvePoint::y() const {
    if (inf_) throw std::invalid_argument("y() of the point at infinity");
    return y_;
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return x_ == o.x_ && y_ == o.y_;
}

bool on_curve(const WeierstrassModel& m, const FieldElement& x, const FieldElement& y) {
    FieldElement lhs = y * y + m.a1 * x * y + m.a3 * y;
    FieldElement rhs = x * x * x + m.a2 * x * x + m.a4 * x + m.a6;
    return lhs == rhs;
}

bool is_singular_point(const WeierstrassModel& m, const FieldElement& x,
                       const FieldElement& y) {
    if (!on_curve(m, x, y)) return false;
    const Field* f = m.field;
    FieldElement fy = f->from_int(2) * y + m.a1 * x + m.a3;
    FieldElement fx = m.a1 * y - (f->from_int(3) * x * x + f->from_int(2) * m.a2 * x + m.a4);
    return fx.is_zero() && fy.is_zero();
}

CurvePoint make_point(const WeierstrassModel& m, const FieldElement& x,
                      const FieldElement& y) {
    if (x.field() != m.field || y.field() != m.field)
        throw std::invalid_argument("point coordinates in the wrong field");
    if (!on_curve(m, x, y)) throw std::invalid_argument("point is not on the curve");
    if (m.kind != WeierstrassModel::Kind::Smooth && is_singular_point(m, x, y))
        throw std::invalid_argument("point is the singular point");
    return CurvePoint(x, y);
}

CurvePoint point_neg(const WeierstrassModel& m, const CurvePoint& p) {
    if (p.is_infinity()) return p;
    return CurvePoint(p.x(), -p.y() - m.a1 * p.x() - m.a3);
}

CurvePoint point_add(const WeierstrassModel& m, const CurvePoint& p,
                     const CurvePoint& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Field* f = m.field;
    const FieldElement &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    if (x1 == x2 && y2 == -y1 - m.a1 * x1 - m.a3) return CurvePoint::infinity();

    FieldElement lambda, nu;
    if (x1 != x2) {
        FieldElement d = (x2 - x1).inv();
        lambda = (y2 - y1) * d;
        nu = (y1 * x2 - y2 * x1) * d;
    } else {
        FieldElement denom = f->from_int(2) * y1 + m.a1 * x1 + m.a3;
        FieldElement d = denom.inv();  // nonzero: q != -p was handled above
        lambda = (f->from_int(3) * x1 * x1 + f->from_int(2) * m.a2 * x1 + m.a4 -
                  m.a1 * y1) *
                 d;
        nu = (-(x1 * x1 * x1) + m.a4 * x1 + f->from_int(2) * m.a6 - m.a3 * y1) * d;
    }
    FieldElement x3 = lambda * lambda + m.a1 * lambda - m.a2 - x1 - x2;
    FieldElement y3 = -(lambda + m.a1) * x3 - nu - m.a3;
    return CurvePoint(x3, y3);
}

CurvePoint scalar_mul(const WeierstrassModel& m, int64_t k, const CurvePoint& p) {
    CurvePoint base = p;
    uint64_t e;
    if (k < 0) {
        base = point_neg(m, p);
        e = static_cast<uint64_t>(-k);
    } else {
        e = static_cast<uint64_t>(k);
    }
    CurvePoint acc = CurvePoint::infinity();
    while (e) {
        if (e & 1) acc = point_add(m, acc, base);
        base = point_add(m, base, base);
        e >>= 1;
    }
    return acc;
}

std::vector<FieldElement> y_roots(const WeierstrassModel& m, const FieldElement& x) {
    const Field* f = m.field;
    FieldElement rhs = x * x * x + m.a2 * x * x + m.a4 * x + m.a6;
    // y^2 + (a1 x + a3) y - rhs = 0
    return quadratic_roots(f->one(), m.a1 * x + m.a3, -rhs);
}

std::vector<CurvePoint> enumerate_points(const WeierstrassModel& m) {
    const Field* f = m.field;
    if (f->order() > (1ULL << 22))
        throw std::invalid_argument("enumerate_points: field too large");
    std::vector<CurvePoint> pts;
    pts.push_back(CurvePoint::infinity());
    for (uint64_t i = 0; i < f->order(); ++i) {
        FieldElement x = f->from_uint(i);
        for (const auto& y : y_roots(m, x)) {
            if (m.kind != WeierstrassModel::Kind::Smooth && is_singular_point(m, x, y))
                continue;
            pts.emplace_back(x, y);
        }
    }
    return pts;
}

namespace {

struct PointKey {
    uint64_t x, y;
    bool operator==(const PointKey& o) const { return x == o.x && y == o.y; }
};
struct PointKeyHash {
    size_t operator()(const PointKey& k) const {
        return std::hash<uint64_t>()(Rng::mix(k.x, k.y));
    }
};

// Some multiple of ord(p) inside the Hasse interval, by baby-step giant-step.
uint64_t bsgs_annihilator(const WeierstrassModel& m, const CurvePoint& p) {
    uint64_t q = m.field->order();
    uint64_t w = isqrt_u64(4 * q);
    uint64_t lo = q + 1 - w;
    uint64_t hi = q + 1 + w;
    uint64_t s = isqrt_u64(hi - lo) + 1;

    std::unordered_map<PointKey, uint64_t, PointKeyHash> baby;
    CurvePoint bp = CurvePoint::infinity();
    for (uint64_t j = 0; j < s; ++j) {
        if (!bp.is_infinity())
            baby.try_emplace(PointKey{bp.x().to_uint(), bp.y().to_uint()}, j);
        bp = point_add(m, bp, p);
    }
    CurvePoint giant = scalar_mul(m, static_cast<int64_t>(lo), p);
    CurvePoint stride = scalar_mul(m, static_cast<int64_t>(s), p);
    for (uint64_t i = 0; lo + i * s <= hi + s; ++i) {
        if (giant.is_infinity()) return lo + i * s;
        CurvePoint ng = point_neg(m, giant);
        auto it = baby.find(PointKey{ng.x().to_uint(), ng.y().to_uint()});
        if (it != baby.end()) return lo + i * s + it->second;
        giant = point_add(m, giant, stride);
    }
    throw std::logic_error("bsgs found no annihilator in the Hasse interval");
}

uint64_t order_from_annihilator(const WeierstrassModel& m, const CurvePoint& p,
                                uint64_t mult) {
    uint64_t ord = mult;
    for (uint64_t pf : factorize(mult)) {
        while (ord % pf == 0 &&
               scalar_mul(m, static_cast<int64_t>(ord / pf), p).is_infinity())
            ord /= pf;
    }
    return ord;
}

}  // namespace

uint64_t group_order(const WeierstrassModel& m) {
    const Field* f = m.field;
    uint64_t q = f->order();
    if (q > (1ULL << 24)) throw std::invalid_argument("group_order: field too large");
    if (m.kind == WeierstrassModel::Kind::Cuspidal) return q;
    if (m.kind == WeierstrassModel::Kind::Nodal) {
        // Split case (rational tangents at the node) gives q-1; the canonical
        // model (1,0,0,0,0) is split. Non-split nodal curves are counted.
        if (q <= (1ULL << 12)) return enumerate_points(m).size();
        throw std::invalid_argument("group_order: large nodal models unsupported");
    }
    if (q <= (1ULL << 12)) return enumerate_points(m).size();

    uint64_t w = isqrt_u64(4 * q);
    uint64_t lo = q + 1 - w, hi = q + 1 + w;
    Rng rng(Rng::mix(0xc07ed, q));
    uint64_t lcm = 1;
    for (int rounds = 0; rounds < 64; ++rounds) {
        CurvePoint p = random_point(m, rng);
        uint64_t ord = order_from_annihilator(m, p, bsgs_annihilator(m, p));
        lcm = lcm / std::gcd(lcm, ord) * ord;
        uint64_t first = ((lo + lcm - 1) / lcm) * lcm;
        if (first > hi) throw std::logic_error("group exponent outside Hasse interval");
        if (first + lcm > hi) return first;
    }
    throw std::runtime_error("group_order: ambiguous after many samples");
}

uint64_t point_order(const WeierstrassModel& m, const CurvePoint& p) {
    if (p.is_infinity()) return 1;
    uint64_t n = group_order(m);
    return order_from_annihilator(m, p, n);
}

CurvePoint random_point(const WeierstrassModel& m, Rng& rng) {
    const Field* f = m.field;
    for (int tries = 0; tries < 4096; ++tries) {
        FieldElement x = f->random_element(rng);
        auto ys = y_roots(m, x);
        if (ys.empty()) continue;
        FieldElement y = ys[rng.below(ys.size())];
        if (m.kind != WeierstrassModel::Kind::Smooth && is_singular_point(m, x, y))
            continue;
        return CurvePoint(x, y);
    }
    throw std::runtime_error("random_point: no affine point found");
}

uint64_t trace_morphism(const WeierstrassModel& m, const CurvePoint& p) {
    if (m.field->p() != 2) throw std::invalid_argument("trace morphism needs char 2");
    if (m.a1.is_zero()) throw std::invalid_argument("trace morphism needs an ordinary curve");
    if (p.is_infinity()) return 0;
    FieldElement v = (p.x() + m.a2) / (m.a1 * m.a1);
    return m.field->trace(v);
}

WeierstrassModel nodal_model(const Field* f) {
    return WeierstrassModel::make_ints(f, {1, 0, 0, 0, 0});
}

WeierstrassModel cuspidal_model(const Field* f) {
    return WeierstrassModel::make_ints(f, {0, 0, 0, 0, 0});
}

CurvePoint nodal_param(const Field* f, const FieldElement& t) {
    if (t.is_zero()) throw std::invalid_argument("nodal_param: t = 0 excluded");
    if (t.is_one()) return CurvePoint::infinity();
    FieldElement d = (t - f->one()).inv();
    FieldElement d2 = d * d;
    return CurvePoint(t * d2, t * d2 * d);
}

FieldElement nodal_param_inv(const Field* f, const CurvePoint& p) {
    if (p.is_infinity()) return f->one();
    return f->one() + p.x() / p.y();
}

CurvePoint cuspidal_param(const Field*, const FieldElement& t) {
    if (t.is_zero()) return CurvePoint::infinity();
    FieldElement ti = t.inv();
    FieldElement ti2 = ti * ti;
    return CurvePoint(ti2, ti2 * ti);
}

FieldElement cuspidal_param_inv(const Field* f, const CurvePoint& p) {
    if (p.is_infinity()) return f->zero();
    return p.x() / p.y();
}

WeierstrassModel embed_model(const WeierstrassModel& m, const QuadraticExtension& ext) {
    return WeierstrassModel::make(
        ext.top(), {ext.embed(m.a1), ext.embed(m.a2), ext.embed(m.a3),
                    ext.embed(m.a4), ext.embed(m.a6)});
}

WeierstrassModel random_smooth_model(const Field* f, Rng& rng) {
    for (int tries = 0; tries < 4096; ++tries) {
        std::array<FieldElement, 5> a = {f->random_element(rng), f->random_element(rng),
                                         f->random_element(rng), f->random_element(rng),
                                         f->random_element(rng)};
        WeierstrassModel m = WeierstrassModel::make(f, a);
        if (m.kind == WeierstrassModel::Kind::Smooth) return m;
    }
    throw std::runtime_error("random_smooth_model: no smooth draw");
}

WeierstrassModel random_ordinary_model(const Field* f, Rng& rng) {
    if (f->p() != 2) throw std::invalid_argument("ordinary model draw needs char 2");
    for (int tries = 0; tries < 4096; ++tries) {
        FieldElement a1 = f->random_element(rng);
        if (a1.is_zero()) continue;
        std::array<FieldElement, 5> a = {a1, f->random_element(rng),
                                         f->random_element(rng), f->random_element(rng),
                                         f->random_element(rng)};
        WeierstrassModel m = WeierstrassModel::make(f, a);
        if (m.kind == WeierstrassModel::Kind::Smooth) return m;
    }
    throw std::runtime_error("random_ordinary_model: no smooth draw");
}

CurveSearchResult find_curve_with_large_order_point(uint64_t n, uint64_t seed,
                                                    uint32_t trial_cap) {
    if (n > (1ULL << 20))
        throw std::invalid_argument("find_curve_with_large_order_point: n > 2^20");
    Rng rng(Rng::mix(seed, 0xc93f1e1d));
    uint32_t k = 1;
    while ((1ULL << k) + 1 + isqrt_u64(4ULL << k) < n) ++k;
    for (; k <= 24; ++k) {
        const Field* f = Field::get(2, k);
        for (uint32_t t = 0; t < trial_cap; ++t) {
            WeierstrassModel m = random_smooth_model(f, rng);
            CurvePoint p = random_point(m, rng);
            uint64_t ord = point_order(m, p);
            if (ord >= n) return CurveSearchResult{f, m, p, ord};
        }
    }
    throw std::runtime_error("curve search budget exhausted");
}

}  // namespace semaev
