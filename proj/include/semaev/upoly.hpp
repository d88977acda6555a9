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

#ifndef SEMAEV_UPOLY_HPP
#define SEMAEV_UPOLY_HPP

#include <cstdint>
#include <vector>

#include "semaev/fields.hpp"

namespace semaev {

// Dense univariate polynomial over a Field, ascending coefficients, trimmed.
struct UPoly {
    const Field* f = nullptr;
    std::vector<FieldElement> c;

    static UPoly zero(const Field* f) { return UPoly{f, {}}; }
    static UPoly constant(const FieldElement& a);
    static UPoly make(const Field* f, std::vector<FieldElement> coeffs);
    static UPoly xpow(const Field* f, uint32_t k);

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const FieldElement& lead() const { return c.back(); }
    FieldElement coeff(uint32_t i) const;
    FieldElement eval(const FieldElement& x) const;
    UPoly monic() const;
    void trim();
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly mul_scalar(const UPoly& a, const FieldElement& s);
// a = q*b + r with deg r < deg b; b nonzero.
void divmod(const UPoly& a, const UPoly& b, UPoly* q, UPoly* r);
UPoly rem(const UPoly& a, const UPoly& b);
UPoly gcd_monic(UPoly a, UPoly b);
UPoly powmod(const UPoly& base, uint64_t e, const UPoly& mod);

// Determinant-of-Sylvester resultant with *declared* degrees da, db: the
// coefficient spans are taken as length da+1 / db+1 even if leading entries
// are zero. This matches specialising a symbolic resultant after the fact.
FieldElement resultant_declared(const Field* f,
                                const std::vector<FieldElement>& a, uint32_t da,
                                const std::vector<FieldElement>& b, uint32_t db);

// Distinct roots of a*z^2 + b*z + c in the coefficients' field (any char).
std::vector<FieldElement> quadratic_roots(const FieldElement& a,
                                          const FieldElement& b,
                                          const FieldElement& c);

// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
UPoly interpolate(const Field* f, const std::vector<FieldElement>& xs,
                  const std::vector<FieldElement>& ys);

}  // namespace semaev

#endif
