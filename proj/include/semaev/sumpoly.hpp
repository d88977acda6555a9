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

#ifndef SEMAEV_SUMPOLY_HPP
#define SEMAEV_SUMPOLY_HPP

#include <optional>
#include <vector>

#include "semaev/curves.hpp"
#include "semaev/multipoly.hpp"

namespace semaev {

inline constexpr uint32_t kMaxSummationArity = 7;        // symbolic construction
inline constexpr uint32_t kMaxSummationEvalArity = 12;   // pointwise cascade

// The r-th summation polynomial for the model's coefficient vector, in
// variables X0..X{r-1}: S_2 = X0 - X1, S_3 the quartic with the b-invariants,
// and S_r for r > 3 by eliminating the shared variable of S_{r-1} and S_3
// with a resultant. 2 <= r <= kMaxSummationArity.
MultiPoly summation_poly(const WeierstrassModel& m, uint32_t r);

// S(x_0,...,x_{r-1}) evaluated without constructing the symbolic polynomial:
// the elimination variable is resolved level by level with declared-degree
// Sylvester determinants, so the value agrees exactly with evaluating the
// symbolic S_r. Supports r up to kMaxSummationEvalArity.
FieldElement eval_summation(const WeierstrassModel& m,
                            const std::vector<FieldElement>& xs);

struct SummationInstance {
    WeierstrassModel model;
    std::vector<FieldElement> inputs;
    uint32_t arity() const { return static_cast<uint32_t>(inputs.size()); }
    FieldElement evaluate() const { return eval_summation(model, inputs); }
};

// Point relation search behind a vanishing value: candidate points live in
// the quadratic extension (x-coordinates are rational, y solves a quadratic).
struct VanishingReport {
    bool vanishes = false;        // S(inputs) == 0
    bool witness_found = false;   // some +-sum of candidate points is 0
    // Witness points over the extension field, one per input, summing to 0.
    std::vector<CurvePoint> points;
    const Field* witness_field = nullptr;
    bool consistent() const { return vanishes == witness_found; }
};

VanishingReport verify_vanishing_by_points(const WeierstrassModel& m,
                                           const std::vector<FieldElement>& xs);

// Both-sides evaluation of the singular-model product identities: the
// summation polynomial at the transformed inputs against the explicit factor
// product times its unit. `equal` is exact equality including the unit.
struct DegenerateCheck {
    FieldElement lhs, rhs;
    bool equal = false;
    bool vanishes = false;
    bool relation_exists = false;
};

// Model (1,0,0,0,0), inputs x_i notin {0,1}; relation means some
// x0^{n0} x1^{n1} x2^{n2} = 1 with n_i = +-1.
DegenerateCheck nodal_factorization_check(const Field* f, const FieldElement& x0,
                                          const FieldElement& x1,
                                          const FieldElement& x2);
// Model (0,0,0,0,0), inputs x_i != 0; relation means some +-x0 +-x1 +-x2 = 0.
DegenerateCheck cuspidal_factorization_check(const Field* f, const FieldElement& x0,
                                             const FieldElement& x1,
                                             const FieldElement& x2);

}  // namespace semaev

#endif
