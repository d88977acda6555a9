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

#ifndef SEMAEV_GBPROFILER_HPP
#define SEMAEV_GBPROFILER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "semaev/curves.hpp"
#include "semaev/descent.hpp"
#include "semaev/multipoly.hpp"

namespace semaev {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multilinear GF(2) polynomial over at most 32 named variables; monomials are
// variable masks, kept sorted and cancellation-free.
struct BoolPoly {
    std::vector<uint32_t> monos;

    static BoolPoly from_multipoly(const MultiPoly& p);
    bool is_zero() const { return monos.empty(); }
    uint32_t degree() const;
    bool eval(uint32_t assignment) const;
    BoolPoly times_monomial(uint32_t mask) const;
    void xor_in(const BoolPoly& o);
    bool operator==(const BoolPoly& o) const { return monos == o.monos; }
};

struct BooleanSystem {
    std::vector<std::string> vars;  // <= 32
    std::vector<BoolPoly> gens;
    uint32_t nvars() const { return static_cast<uint32_t>(vars.size()); }
    uint32_t max_degree() const;
};

BooleanSystem to_boolean_system(const std::vector<std::string>& vars,
                                const std::vector<MultiPoly>& gens);

struct MacaulayStepResult {
    uint64_t rows = 0, cols = 0, rank = 0;
    std::vector<BoolPoly> falls;        // new polynomials of degree < d
    std::vector<BoolPoly> linear_rows;  // RREF rows of degree <= 1
};

// One linearization step at degree d: all monomial multiples of the
// generators up to degree d, row-reduced; the returned falls are reduced
// representatives independent of the span generated at degree d-1.
MacaulayStepResult macaulay_step(const BooleanSystem& sys, uint32_t d,
                                 uint64_t mem_budget_bytes);

struct StepRecord {
    uint32_t degree = 0;
    uint64_t rows = 0, cols = 0, rank = 0;
    uint32_t new_falls = 0;
};

struct DegreeProfile {
    uint32_t first_fall_degree = 0;       // 0 = no fall observed ("n/a")
    uint32_t observed_solving_degree = 0; // 0 = unresolved at d_max
    bool resolved = false;
    bool inconsistent = false;
    bool capped = false;
    bool solutions_complete = false;
    uint32_t d_max = 0;  // degree cap used by the run
    std::vector<StepRecord> steps;
    std::vector<uint32_t> solutions;      // variable-assignment masks, sorted
    uint64_t max_rows = 0, max_cols = 0;
};

struct ProfileOptions {
    uint32_t d_max = 4;
    uint64_t mem_budget_bytes = 4ULL << 30;
    uint32_t enum_cap_bits = 16;  // free-variable cap for solution extraction
};

// Iterated linearization with feedback: falls join the generator set, the
// first fall degree is the least d producing one, and the system counts as
// solved at the least d whose accumulated affine-linear span cuts out exactly
// the solution set (verified by enumeration over the free variables).
// Purely linear systems report solving degree 1 and no fall degree.
DegreeProfile profile(const BooleanSystem& sys, const ProfileOptions& opt);

// A subspace-constrained bivariate summation-polynomial descent instance:
// random ordinary curve over GF(2^n), random non-2-torsion point, both
// variables confined to a random subspace of dimension ceil(n/2).
struct ConstrainedInstance {
    uint32_t n = 0;
    uint64_t seed = 0;
    WeierstrassModel model;
    CurvePoint point;
    std::vector<FieldElement> subspace;  // dimension ceil(n/2)
    Basis alpha;
    BooleanSystem system;                // n generators in 2*ceil(n/2) vars
};

ConstrainedInstance build_constrained_instance(uint32_t n, uint64_t seed);

// The chained specialized-S_3 system in X_1..X_{m-3} for deciding whether
// S_m(a_1..a_m) vanishes, descended to GF(2) along the power basis.
struct SplitSystem {
    WeierstrassModel model;
    std::vector<FieldElement> inputs;    // a_1..a_m
    std::vector<MultiPoly> links;        // over GF(2^n), m-2 of them
    BooleanSystem system;                // descended
};

SplitSystem build_split_system(const WeierstrassModel& m,
                               const std::vector<FieldElement>& inputs);

// Exhaustive consistency of the chain over the quadratic extension: scans
// all assignments of the chain variables (with early pruning on the first
// link) and reports whether a common zero exists.
bool split_chain_consistent_ext(const SplitSystem& s);

// Same question decided on the curve: branch over the candidate points above
// every a_i in the quadratic extension and test whether some combination
// sums to zero. Also reports whether any combination walks through infinity
// mid-chain (the degenerate case in which affine chain variables cannot
// represent the relation).
struct ChainPointScan {
    bool relation = false;
    bool mid_infinity = false;
};
ChainPointScan split_chain_point_scan(const SplitSystem& s);

// Degeneration guard for split inputs: repeated x-coordinates collapse link
// degrees, and a middle link specialized at a 2-torsion x-coordinate loses
// its degree-1 combination (b = a1(a1 x + a3) = 0).
bool split_inputs_nondegenerate(const WeierstrassModel& m,
                                const std::vector<FieldElement>& inputs);

}  // namespace semaev

#endif
