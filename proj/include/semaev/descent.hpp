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

#ifndef SEMAEV_DESCENT_HPP
#define SEMAEV_DESCENT_HPP

#include <string>
#include <vector>

#include "semaev/curves.hpp"
#include "semaev/multipoly.hpp"

namespace semaev {

// Normal form modulo the field equations X_i^{p^n} - X_i of the big field.
MultiPoly reduce_r1(const MultiPoly& f);

// Tr(f) = sum of the n Frobenius twists of f, reduced; evaluation-compatible
// with the field trace and GF(p)-valued at every point.
MultiPoly ring_trace(const MultiPoly& f);

// Weil descent of one polynomial. Each source variable X is replaced by a
// GF(p)-linear combination sum_j X_j * beta_j over fresh variables (named
// "<X>_<j>"), the result is reduced modulo X_j^p - X_j, and its coefficients
// are split along the coordinate basis alpha. `r3` keeps the intermediate
// polynomial over the big field for recombination checks.
struct DescentResult {
    std::vector<std::string> vars;          // descended variable names
    std::vector<MultiPoly> components;      // n polynomials over GF(p)
    MultiPoly r3;                           // over GF(p^n), same variables
};

// Full descent: every variable gets the coordinate basis itself.
DescentResult descend(const MultiPoly& f, const Basis& alpha);
// Constrained descent: per-variable substitution bases (e.g. a random
// subspace of the field); components are still split along alpha.
DescentResult descend_general(const MultiPoly& f,
                              const std::vector<std::vector<FieldElement>>& subs,
                              const Basis& alpha);

// Recombine components along the basis; equals r3 when the descent is sound.
MultiPoly recombine(const DescentResult& d, const Basis& alpha);

// [Tr(c f)]_i = c_i * sum_j Tr(c alpha_j) [f]_j, coefficient-for-coefficient,
// plus the scalar-multiple relation between the components.
struct TraceSplitReport {
    bool identity_holds = false;
    bool ideal_statement_holds = false;
    bool ok() const { return identity_holds && ideal_statement_holds; }
};
TraceSplitReport trace_split_check(const MultiPoly& f, const FieldElement& c,
                                 const Basis& alpha);

// Identity of trace quotients for T = S_3(X1, X2, x(P)) on an ordinary
// char-2 curve with P not 2-torsion, plus the scalar identity between the
// constant terms and the vanishing of T at the doubling relation.
enum class TraceCheckMode { Auto, Exhaustive, Symbolic };

struct TraceQuotientReport {
    bool identity_holds = false;   // Tr(T/b^2) == Tr((X1+X2+x+a2)/a1^2)
    bool scalar_identity = false;  // Tr((b6 x + b8)/b^2) == Tr((x+a2)/a1^2)
    bool zero_at_doubling = false; // T(x(2P), x(P)) == 0
    bool trace_zero_on_variety = false;  // exhaustive mode only
    bool exhaustive_ran = false;
    bool symbolic_ran = false;
    bool ok() const {
        return identity_holds && scalar_identity && zero_at_doubling;
    }
};
TraceQuotientReport trace_quotient_check(const WeierstrassModel& m, const CurvePoint& p,
                                  TraceCheckMode mode = TraceCheckMode::Auto);

// The descended linear combination: weights Tr(alpha_j/b^2) applied to the
// components [T]_j collapse to a degree-1 polynomial with the trace-morphism
// value as constant term.
struct DescentCombinationReport {
    std::vector<uint64_t> weights;  // Tr(alpha_j / b^2), j = 1..n
    MultiPoly lhs, rhs;             // over GF(2), in the descended variables
    bool equal = false;
    uint32_t lhs_degree = 0;
    uint64_t constant = 0;          // Tr((x(P)+a2)/a1^2)
};
DescentCombinationReport descent_combination_check(const WeierstrassModel& m, const CurvePoint& p,
                                      const Basis& alpha);

}  // namespace semaev

#endif
