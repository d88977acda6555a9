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

#ifndef SEMAEV_MULTIPOLY_HPP
#define SEMAEV_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "semaev/fields.hpp"

namespace semaev {

using Exponents = std::vector<uint32_t>;

// Graded reverse lexicographic order; ties by total degree broken so that
// a < b iff the last nonzero entry of a-b is positive.
struct GrevlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over a Field, with a fixed ordered variable
// list. Zero coefficients are never stored. Terms live in a grevlex-ordered
// map, so iteration order (and hence printing) is canonical.
class MultiPoly {
   public:
    using TermMap = std::map<Exponents, FieldElement, GrevlexLess>;

    MultiPoly() = default;
    MultiPoly(const Field* f, std::vector<std::string> vars);

    static MultiPoly constant(const Field* f, std::vector<std::string> vars,
                              const FieldElement& c);
    static MultiPoly variable(const Field* f, std::vector<std::string> vars,
                              uint32_t index);

    const Field* field() const { return f_; }
    const std::vector<std::string>& vars() const { return vars_; }
    uint32_t nvars() const { return static_cast<uint32_t>(vars_.size()); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const FieldElement& c);  // accumulates
    FieldElement coefficient(const Exponents& e) const;
    FieldElement constant_term() const;

    uint32_t total_degree() const;        // 0 for the zero polynomial
    uint32_t degree_in(uint32_t var) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(const FieldElement& s) const;

    FieldElement evaluate(const std::vector<FieldElement>& point) const;
    // Substitute one variable by a polynomial over the same variable list.
    MultiPoly substitute(uint32_t var, const MultiPoly& value) const;
    MultiPoly substitute_const(uint32_t var, const FieldElement& value) const;

    // Coefficient of var^k, as a polynomial in the full variable list.
    MultiPoly coeff_of(uint32_t var, uint32_t k) const;

    // Per-variable exponent reduction e -> ((e-1) mod (q-1)) + 1 for e >= q,
    // i.e. the normal form modulo the field equations X^q - X.
    MultiPoly reduce_mod_field_equations(uint64_t q) const;

    // Coefficient-wise p-th power with exponents multiplied by p.
    MultiPoly frobenius_lift() const;

    // Map this polynomial onto a new variable list; `where[i]` gives the
    // index of variable i in the new list.
    MultiPoly relabel(std::vector<std::string> new_vars,
                      const std::vector<uint32_t>& where) const;

    std::string to_string() const;  // canonical, grevlex-descending

    uint32_t index_of(const std::string& var) const;

   private:
    void check_compatible(const MultiPoly& o) const;
    const Field* f_ = nullptr;
    std::vector<std::string> vars_;
    TermMap terms_;
};

// Sylvester-matrix resultant with respect to one variable; the matrix
// determinant is computed by fraction-free (Bareiss) elimination over the
// polynomial ring, so the result is exact.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, uint32_t var);

// Exact division (throws if the division leaves a remainder).
MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den);

}  // namespace semaev

#endif
