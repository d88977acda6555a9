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

#include "semaev/upoly.hpp"

#include <stdexcept>

namespace semaev {

UPoly UPoly::constant(const FieldElement& a) {
    UPoly r{a.field(), {}};
    if (!a.is_zero()) r.c.push_back(a);
    return r;
}

UPoly UPoly::make(const Field* f, std::vector<FieldElement> coeffs) {
    UPoly r{f, std::move(coeffs)};
    r.trim();
    return r;
}

UPoly UPoly::xpow(const Field* f, uint32_t k) {
    std::vector<FieldElement> c(k + 1, f->zero());
    c[k] = f->one();
    return UPoly{f, std::move(c)};
}

FieldElement UPoly::coeff(uint32_t i) const {
    return i < c.size() ? c[i] : f->zero();
}

FieldElement UPoly::eval(const FieldElement& x) const {
    FieldElement acc = f->zero();
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

UPoly UPoly::monic() const {
    if (is_zero()) throw std::invalid_argument("monic of zero polynomial");
    return mul_scalar(*this, lead().inv());
}

void UPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r{a.f, {}};
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) r.c.push_back(a.coeff(i) + b.coeff(i));
    r.trim();
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly r{a.f, {}};
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) r.c.push_back(a.coeff(i) - b.coeff(i));
    r.trim();
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly::zero(a.f);
    std::vector<FieldElement> c(a.c.size() + b.c.size() - 1, a.f->zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    }
    return UPoly::make(a.f, std::move(c));
}

UPoly mul_scalar(const UPoly& a, const FieldElement& s) {
    if (s.is_zero()) return UPoly::zero(a.f);
    UPoly r{a.f, a.c};
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
}

void divmod(const UPoly& a, const UPoly& b, UPoly* q, UPoly* r) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UPoly rem = a;
    std::vector<FieldElement> quot(
        a.deg() >= b.deg() ? a.deg() - b.deg() + 1 : 0, a.f->zero());
    FieldElement lead_inv = b.lead().inv();
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        int k = rem.deg() - b.deg();
        FieldElement t = rem.lead() * lead_inv;
        quot[k] = t;
        for (int i = 0; i <= b.deg(); ++i) rem.c[k + i] -= t * b.c[i];
        rem.trim();
    }
    if (q) *q = UPoly::make(a.f, std::move(quot));
    if (r) *r = rem;
}

UPoly rem(const UPoly& a, const UPoly& b) {
    UPoly r;
    divmod(a, b, nullptr, &r);
    return r;
}

UPoly gcd_monic(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

UPoly powmod(const UPoly& base, uint64_t e, const UPoly& mod) {
    UPoly acc = UPoly::constant(base.f->one());
    UPoly t = rem(base, mod);
    while (e) {
        if (e & 1) acc = rem(acc * t, mod);
        t = rem(t * t, mod);
        e >>= 1;
    }
    return acc;
}

FieldElement resultant_declared(const Field* f,
                                const std::vector<FieldElement>& a, uint32_t da,
                                const std::vector<FieldElement>& b, uint32_t db) {
    if (da == 0 && db == 0) return f->one();
    auto at = [&](const std::vector<FieldElement>& v, uint32_t i) {
        return i < v.size() ? v[i] : f->zero();
    };

    // Quadratic second argument with nonvanishing leads: reduce a mod b and
    // use res(a,b) = b2^{da-1} * (b2 r0^2 - b1 r1 r0 + b0 r1^2).
    if (db == 2 && da >= 2 && !at(b, 2).is_zero() && !at(a, da).is_zero()) {
        FieldElement b2 = at(b, 2), b1 = at(b, 1), b0 = at(b, 0);
        std::vector<FieldElement> r(da + 1, f->zero());
        for (uint32_t i = 0; i <= da; ++i) r[i] = at(a, i);
        FieldElement b2inv = b2.inv();
        for (uint32_t k = da; k >= 2; --k) {
            if (r[k].is_zero()) continue;
            FieldElement t = r[k] * b2inv;
            r[k - 1] -= t * b1;
            r[k - 2] -= t * b0;
        }
        FieldElement alpha = r[1], beta = r[0];
        FieldElement core = b2 * beta * beta - b1 * alpha * beta + b0 * alpha * alpha;
        return b2.pow(da - 1) * core;
    }
    uint32_t dim = da + db;
    // Row-major Sylvester matrix: db rows of a-coefficients, da rows of b's.
    std::vector<FieldElement> m(static_cast<size_t>(dim) * dim, f->zero());
    for (uint32_t i = 0; i < db; ++i)
        for (uint32_t j = 0; j <= da; ++j) m[i * dim + i + j] = at(a, da - j);
    for (uint32_t i = 0; i < da; ++i)
        for (uint32_t j = 0; j <= db; ++j) m[(db + i) * dim + i + j] = at(b, db - j);

    FieldElement det = f->one();
    bool neg = false;
    for (uint32_t col = 0; col < dim; ++col) {
        uint32_t piv = dim;
        for (uint32_t row = col; row < dim; ++row)
            if (!m[row * dim + col].is_zero()) { piv = row; break; }
        if (piv == dim) return f->zero();
        if (piv != col) {
            for (uint32_t j = col; j < dim; ++j)
                std::swap(m[piv * dim + j], m[col * dim + j]);
            neg = !neg;
        }
        FieldElement pv = m[col * dim + col];
        det *= pv;
        FieldElement pv_inv = pv.inv();
        for (uint32_t row = col + 1; row < dim; ++row) {
            FieldElement factor = m[row * dim + col];
            if (factor.is_zero()) continue;
            factor *= pv_inv;
            for (uint32_t j = col; j < dim; ++j)
                m[row * dim + j] -= factor * m[col * dim + j];
        }
    }
    return neg ? -det : det;
}

std::vector<FieldElement> quadratic_roots(const FieldElement& a,
                                          const FieldElement& b,
                                          const FieldElement& c) {
    const Field* f = a.field();
    std::vector<FieldElement> roots;
    if (a.is_zero()) {
        if (!b.is_zero()) roots.push_back(-(c / b));
        return roots;  // b == 0: constant, no finite root reported
    }
    if (f->p() == 2) {
        if (b.is_zero()) {
            auto r = f->sqrt(c / a);
            if (r) roots.push_back(*r);  // double root
            return roots;
        }
        // z = (b/a) w turns it into w^2 + w = a*c/b^2.
        FieldElement scale = b / a;
        auto w = f->solve_artin_schreier(a * c / (b * b));
        if (!w) return roots;
        roots.push_back(scale * *w);
        roots.push_back(scale * (*w + f->one()));
    } else {
        FieldElement four = f->from_int(4);
        FieldElement two_inv = f->from_int(2).inv();
        FieldElement disc = b * b - four * a * c;
        if (disc.is_zero()) {
            roots.push_back(-b * two_inv / a);
            return roots;
        }
        auto s = f->sqrt(disc);
        if (!s) return roots;
        FieldElement half_a = two_inv / a;
        roots.push_back((-b + *s) * half_a);
        roots.push_back((-b - *s) * half_a);
    }
    return roots;
}

UPoly interpolate(const Field* f, const std::vector<FieldElement>& xs,
                  const std::vector<FieldElement>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    // Newton form, incremental.
    UPoly result = UPoly::zero(f);
    UPoly basis = UPoly::constant(f->one());
    for (size_t i = 0; i < xs.size(); ++i) {
        FieldElement want = ys[i] - result.eval(xs[i]);
        FieldElement denom = basis.eval(xs[i]);
        result = result + mul_scalar(basis, want / denom);
        basis = basis * UPoly::make(f, {-xs[i], f->one()});
    }
    return result;
}

}  // namespace semaev
