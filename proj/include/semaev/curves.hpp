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

#ifndef SEMAEV_CURVES_HPP
#define SEMAEV_CURVES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "semaev/fields.hpp"
#include "semaev/rng.hpp"

namespace semaev {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a fixed field, with the
// derived b-invariants and the smooth/nodal/cuspidal classification.
struct WeierstrassModel {
    enum class Kind { Smooth, Nodal, Cuspidal };

    static WeierstrassModel make(const Field* f,
                                 const std::array<FieldElement, 5>& a);
    static WeierstrassModel make_ints(const Field* f,
                                      const std::array<int64_t, 5>& a);

    const Field* field = nullptr;
    FieldElement a1, a2, a3, a4, a6;
    FieldElement b2, b4, b6, b8;
    FieldElement c4, disc;
    Kind kind = Kind::Smooth;

    bool ordinary_char2() const;  // char 2 and a1 != 0
};

class CurvePoint {
   public:
    CurvePoint() : inf_(true) {}
    static CurvePoint infinity() { return CurvePoint(); }
    CurvePoint(FieldElement x, FieldElement y)
        : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    bool is_infinity() const { return inf_; }
    const FieldElement& x() const;
    const FieldElement& y() const;

    bool operator==(const CurvePoint& o) const;
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }

   private:
    bool inf_;
    FieldElement x_, y_;
};

// Point construction with validation: the affine point must satisfy the curve
// equation and, on singular models, avoid the singular point.
CurvePoint make_point(const WeierstrassModel& m, const FieldElement& x,
                      const FieldElement& y);
bool on_curve(const WeierstrassModel& m, const FieldElement& x, const FieldElement& y);
bool is_singular_point(const WeierstrassModel& m, const FieldElement& x,
                       const FieldElement& y);

CurvePoint point_neg(const WeierstrassModel& m, const CurvePoint& p);
CurvePoint point_add(const WeierstrassModel& m, const CurvePoint& p,
                     const CurvePoint& q);
CurvePoint scalar_mul(const WeierstrassModel& m, int64_t k, const CurvePoint& p);

// y-values over the model's own field for a given x (0, 1 or 2 of them).
std::vector<FieldElement> y_roots(const WeierstrassModel& m, const FieldElement& x);

// All rational points of the smooth locus, infinity first; enumeration only
// (field order capped at 2^22).
std::vector<CurvePoint> enumerate_points(const WeierstrassModel& m);

// |E(F_q)| resp. |E_ns(F_q)|: enumeration for q <= 2^12, BSGS above
// (contract: q <= 2^24).
uint64_t group_order(const WeierstrassModel& m);
uint64_t point_order(const WeierstrassModel& m, const CurvePoint& p);
CurvePoint random_point(const WeierstrassModel& m, Rng& rng);

// The GF(2)-valued morphism P -> Tr((x(P)+a2)/a1^2) on ordinary char-2
// curves; infinity maps to 0 and the kernel is 2E(F).
uint64_t trace_morphism(const WeierstrassModel& m, const CurvePoint& p);

// Canonical singular models and their smooth-locus parametrizations.
WeierstrassModel nodal_model(const Field* f);     // (1,0,0,0,0)
WeierstrassModel cuspidal_model(const Field* f);  // (0,0,0,0,0)
// F* -> E_ns: 1 -> infinity, t -> (t/(t-1)^2, t/(t-1)^3); inverse 1 + x/y.
CurvePoint nodal_param(const Field* f, const FieldElement& t);
FieldElement nodal_param_inv(const Field* f, const CurvePoint& p);
// (F,+) -> E_ns: 0 -> infinity, t -> (1/t^2, 1/t^3); inverse x/y.
CurvePoint cuspidal_param(const Field* f, const FieldElement& t);
FieldElement cuspidal_param_inv(const Field* f, const CurvePoint& p);

// Model with coefficients pushed through a quadratic extension.
WeierstrassModel embed_model(const WeierstrassModel& m, const QuadraticExtension& ext);

WeierstrassModel random_smooth_model(const Field* f, Rng& rng);
// char 2, a1 != 0, smooth
WeierstrassModel random_ordinary_model(const Field* f, Rng& rng);

struct CurveSearchResult {
    const Field* field;
    WeierstrassModel model;
    CurvePoint point;
    uint64_t order;  // order of `point`
};

// Randomized realization of "curve with a point of order >= N": char-2 fields
// are scanned from the smallest q with q+1+floor(2 sqrt q) >= N upward.
CurveSearchResult find_curve_with_large_order_point(uint64_t n, uint64_t seed,
                                                    uint32_t trial_cap = 256);

}  // namespace semaev

#endif
