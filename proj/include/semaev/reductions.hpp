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

#ifndef SEMAEV_REDUCTIONS_HPP
#define SEMAEV_REDUCTIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "semaev/sumpoly.hpp"

namespace semaev {

// ---------------------------------------------------------------------------
// 3-SAT instances

struct SatInstance {
    uint32_t num_vars = 0;
    // exactly 3 signed 1-based literals per clause; shorter input clauses are
    // padded by duplicating their first literal
    std::vector<std::array<int32_t, 3>> clauses;
};

struct DimacsError : std::runtime_error {
    DimacsError(const std::string& msg, uint32_t line, uint32_t col);
    uint32_t line, col;
};

SatInstance parse_dimacs(const std::string& text);

bool sat_check(const SatInstance& sat, const std::vector<bool>& assignment);
// Exhaustive, canonical first satisfying assignment in lexicographic order
// (variable 1 most significant, false before true). Capped at 24 variables.
std::optional<std::vector<bool>> sat_solve(const SatInstance& sat);

// ---------------------------------------------------------------------------
// Subset sum

struct SubsetSumInstance {
    enum class Kind { Integers, ModVec };
    Kind kind = Kind::Integers;
    uint64_t modulus = 0;  // ModVec
    uint32_t dim = 0;      // ModVec
    std::vector<int64_t> int_elements;
    std::vector<std::vector<uint32_t>> vec_elements;
    int64_t int_target = 0;
    std::vector<uint32_t> vec_target;

    size_t size() const {
        return kind == Kind::Integers ? int_elements.size() : vec_elements.size();
    }
};

// Decision + canonical witness (the set whose low-index-first indicator mask
// is smallest): plain enumeration for small instances, meet-in-the-middle
// with the same canonical tie-breaking up to 48 elements.
std::optional<std::vector<uint32_t>> subset_solve(const SubsetSumInstance& inst);
bool subset_check(const SubsetSumInstance& inst, const std::vector<uint32_t>& chosen);

// ---------------------------------------------------------------------------
// 3-SAT -> subset sum

struct Gadget {
    uint64_t m = 0;
    uint32_t r = 0, k = 0;
    std::vector<std::vector<uint32_t>> c;  // c_1..c_3, each length r
    std::vector<std::vector<uint32_t>> d;  // d_1..d_k
    std::vector<uint32_t> t;
};

Gadget gadget_for(uint64_t m);
// Conditions: every nonempty C of {c1,c2,c3} is completable to t by some
// subset of the d's, and no subset of the d's alone reaches t.
bool audit_gadget(const Gadget& g);

// Element layout: for each variable i the positive then the negative literal
// vector, then the clause slacks h_{j,i} grouped by clause.
struct ModReduction {
    SubsetSumInstance instance;  // over (Z/mZ)^{s + r w}
    Gadget gadget;
    uint32_t s = 0, w = 0;
};
ModReduction sat_to_subsetsum_modm(const SatInstance& sat, uint64_t m);

// The same construction packed into integers with radix 8 (larger than any
// per-digit column sum, so no carries occur).
struct IntReduction {
    SubsetSumInstance instance;  // over Z
    uint32_t s = 0, w = 0;
    uint32_t radix = 8;
};
IntReduction sat_to_subsetsum_int(const SatInstance& sat);

// ---------------------------------------------------------------------------
// Subset sum -> summation polynomial instances

// Over Z: numbers become multiples of a point of large order on a curve found
// by randomized search, the target is normalized to a +-1 combination.
struct EcReduction {
    SummationInstance instance;
    CurveSearchResult curve;
    std::vector<int64_t> v;               // nonzero elements, original order
    std::vector<uint32_t> zero_elements;  // stripped indices
    int64_t wprime = 0;
    bool wprime_zero = false;
};
EcReduction subsetsum_to_sumpoly_ec(const SubsetSumInstance& inst, uint64_t seed);

// Over (Z/pZ)^dim, p odd: vectors are identified with GF(p^dim) and the
// instance becomes reciprocal squares fed to the cuspidal-model polynomial.
struct CuspReduction {
    SummationInstance instance;  // over the cuspidal model of GF(p^dim)
    const Field* field = nullptr;
    std::vector<FieldElement> v;
    std::vector<uint32_t> zero_elements;
    FieldElement wprime;
    bool wprime_zero = false;
};
CuspReduction subsetsum_to_sumpoly_cusp(const SubsetSumInstance& inst);

// Sign search: n_i in {+1,-1} with sum n_i v_i = w' (or 0 when w' = 0).
// Canonical witness: smallest mask with bit i set for n_i = -1.
std::optional<std::vector<int8_t>> cusp_sign_solve(const CuspReduction& red);
std::optional<std::vector<int8_t>> ec_sign_solve(const EcReduction& red);

// Vanishing of the cuspidal instance, decided through the +-combination
// criterion (the instance arities are far beyond symbolic construction).
bool cusp_instance_vanishes(const CuspReduction& red);

// ---------------------------------------------------------------------------
// End-to-end pipelines with witness pull-back

struct CuspPipeline {
    SatInstance sat;
    ModReduction stage1;
    CuspReduction stage2;
    bool satisfiable = false;
    // present when satisfiable:
    std::vector<int8_t> signs;
    std::vector<uint32_t> subset;
    std::vector<bool> assignment;
};
CuspPipeline run_cusp_pipeline(const SatInstance& sat, uint64_t p = 3);

struct EcPipeline {
    SatInstance sat;
    IntReduction stage1;
    EcReduction stage2;
    bool satisfiable = false;
    std::vector<int8_t> signs;
    std::vector<uint32_t> subset;
    std::vector<bool> assignment;
};
EcPipeline run_ec_pipeline(const SatInstance& sat, uint64_t seed);

// Stagewise pull-back with verification at every stage; throws
// std::invalid_argument at the first failing stage.
std::vector<uint32_t> pull_back_signs_to_subset(const std::vector<int8_t>& signs,
                                                const SubsetSumInstance& upstream,
                                                const std::vector<uint32_t>& zero_elements);
std::vector<bool> pull_back_subset_to_assignment(const std::vector<uint32_t>& subset,
                                                 const ModReduction& red,
                                                 const SatInstance& sat);
std::vector<bool> pull_back_subset_to_assignment_int(const std::vector<uint32_t>& subset,
                                                     const IntReduction& red,
                                                     const SatInstance& sat);

}  // namespace semaev

#endif
