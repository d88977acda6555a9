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

#ifndef SEMAEV_FIELDS_HPP
#define SEMAEV_FIELDS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semaev/rng.hpp"

namespace semaev {

class Field;
class FieldElement;

// GF(p^n) in polynomial basis GF(p)[x]/(modulus). Fields are interned: get()
// returns a pointer that stays valid for the lifetime of the process, and two
// calls with the same (p, n, modulus) return the same object, so element
// compatibility is plain pointer equality.
class Field {
   public:
    // Deterministic modulus search: monic candidates are enumerated by
    // counting (constant coefficient least significant) and the first
    // irreducible one wins, so construction is reproducible across runs.
    static const Field* get(uint64_t p, uint32_t n);
    static const Field* get(uint64_t p, uint32_t n, const std::vector<uint64_t>& modulus);

    uint64_t p() const { return p_; }
    uint32_t n() const { return n_; }
    const std::vector<uint64_t>& modulus() const { return modulus_; }
    uint64_t order() const { return order_; }  // p^n

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement gen() const;  // the residue of x (requires n >= 2)
    FieldElement from_coords(const std::vector<uint64_t>& coords) const;
    FieldElement from_uint(uint64_t v) const;  // base-p digits as coords
    FieldElement from_int(int64_t v) const;    // constant, reduced mod p
    FieldElement random_element(Rng& rng) const;

    // Trace to the prime field, as a residue in [0, p).
    uint64_t trace(const FieldElement& a) const;

    // Roots of z^2 + z = c (characteristic 2 only); returns the solution with
    // the smaller integer encoding, the other being z + 1.
    std::optional<FieldElement> solve_artin_schreier(const FieldElement& c) const;

    // Square root; for p = 2 always exists, for odd p uses Tonelli-Shanks.
    std::optional<FieldElement> sqrt(const FieldElement& a) const;

    std::string describe() const;  // "GF(2^4)" style

   private:
    friend class FieldElement;
    Field(uint64_t p, uint32_t n, std::vector<uint64_t> modulus);

    uint64_t p_;
    uint32_t n_;
    std::vector<uint64_t> modulus_;  // length n+1, monic
    uint64_t order_;

    // p == 2 fast path
    uint64_t mod_mask_ = 0;  // bits of modulus incl. bit n (n <= 62)
    uint64_t trace_mask_ = 0;
    std::vector<uint64_t> as_rows_;   // solved RREF of z |-> z^2+z
    std::vector<int> as_pivot_col_;   // pivot column per row, -1 padded

    // generic path
    std::vector<uint64_t> trace_pow_;     // Tr(x^i) for i < n
    mutable uint64_t nonresidue_ = 0;     // odd p, lazily found
    mutable bool nonresidue_ready_ = false;

    uint64_t mul_small(uint64_t a, uint64_t b) const;  // p == 2 packed
    void mul_wide(const uint64_t* a, const uint64_t* b, uint64_t* out) const;
    uint64_t find_nonresidue() const;
};

class FieldElement {
   public:
    FieldElement() : f_(nullptr) {}

    const Field* field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inv() const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }
    FieldElement pow(uint64_t e) const;
    FieldElement square() const { return *this * *this; }
    FieldElement frobenius() const;  // a^p

    std::vector<uint64_t> coords() const;
    uint64_t coord(uint32_t i) const;
    uint64_t to_uint() const;  // sum coords[i] * p^i

   private:
    friend class Field;
    FieldElement(const Field* f, uint64_t s) : f_(f), s_(s) {}
    FieldElement(const Field* f, std::vector<uint64_t> w) : f_(f), s_(0), w_(std::move(w)) {}

    const Field* f_;
    uint64_t s_ = 0;            // p == 2: packed bits; n == 1: residue
    std::vector<uint64_t> w_;   // otherwise: n residues

    bool small_rep() const;
    void check_same(const FieldElement& o) const;
};

// An ordered GF(p)-basis of the field, with precomputed change-of-coordinates.
class Basis {
   public:
    const Field* field() const { return f_; }
    uint32_t size() const { return static_cast<uint32_t>(alphas_.size()); }
    const FieldElement& alpha(uint32_t j) const { return alphas_[j]; }
    const std::vector<FieldElement>& alphas() const { return alphas_; }

    std::vector<uint64_t> coords_in(const FieldElement& a) const;
    FieldElement combine(const std::vector<uint64_t>& coords) const;
    std::vector<uint64_t> one_coords() const { return coords_in(f_->one()); }

   private:
    friend Basis make_basis(std::vector<FieldElement> alphas);
    const Field* f_ = nullptr;
    std::vector<FieldElement> alphas_;
    std::vector<std::vector<uint64_t>> inv_;  // inverse coordinate matrix mod p
};

Basis make_basis(std::vector<FieldElement> alphas);  // throws if rank-deficient
Basis power_basis(const Field* f);
Basis random_basis(const Field* f, Rng& rng);

class QuadraticExtension;
// Process-wide cache; extensions are deterministic per base field.
const QuadraticExtension& quadratic_extension_of(const Field* base);

// The quadratic extension of a field together with the embedding and the
// relative Frobenius (the nontrivial automorphism fixing the base image).
class QuadraticExtension {
   public:
    explicit QuadraticExtension(const Field* base);

    const Field* base() const { return base_; }
    const Field* top() const { return top_; }

    FieldElement embed(const FieldElement& a) const;
    FieldElement sigma(const FieldElement& b) const;     // order-2 automorphism
    bool in_base_image(const FieldElement& b) const;
    std::optional<FieldElement> project(const FieldElement& b) const;

   private:
    const Field* base_;
    const Field* top_;
    std::vector<FieldElement> rho_pow_;                 // rho^0..rho^{n-1}
    std::vector<std::vector<uint64_t>> sigma_mat_;      // 2n x 2n over GF(p)
    std::vector<std::vector<uint64_t>> proj_rows_;      // solver for project()
    std::vector<int> proj_pivots_;
};

namespace fppoly {
// Dense univariate polynomials over GF(p), used for modulus bookkeeping.
// Coefficient vectors are ascending-degree and trimmed.
using Poly = std::vector<uint64_t>;
Poly trim(Poly a);
Poly mul(const Poly& a, const Poly& b, uint64_t p);
Poly rem(Poly a, const Poly& b, uint64_t p);
Poly gcd(Poly a, Poly b, uint64_t p);
Poly pow_xq_mod(const Poly& f, uint64_t p, uint32_t k);  // x^{p^k} mod f
bool is_irreducible(const Poly& f, uint64_t p);
}  // namespace fppoly

}  // namespace semaev

#endif
