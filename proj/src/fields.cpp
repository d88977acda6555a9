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

#include "semaev/fields.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "semaev/upoly.hpp"

namespace semaev {

namespace {

bool is_prime_u64(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t acc = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) acc = mulmod_u64(acc, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return acc;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) { return powmod_u64(a, p - 2, p); }

// Small dense GF(p) linear solver: RREF of [A | I], free variables pinned
// to zero, consistency rows checked on every solve.
struct FpSolver {
    uint64_t p = 0;
    uint32_t nrows = 0, ncols = 0;
    std::vector<std::vector<uint64_t>> rows;  // each: ncols A-part + nrows T-part
    std::vector<int> pivot_col;

    static FpSolver build(const std::vector<std::vector<uint64_t>>& columns,
                          uint32_t nrows, uint64_t p) {
        FpSolver s;
        s.p = p;
        s.nrows = nrows;
        s.ncols = static_cast<uint32_t>(columns.size());
        s.rows.assign(nrows, std::vector<uint64_t>(s.ncols + nrows, 0));
        for (uint32_t j = 0; j < s.ncols; ++j)
            for (uint32_t i = 0; i < nrows; ++i) s.rows[i][j] = columns[j][i] % p;
        for (uint32_t i = 0; i < nrows; ++i) s.rows[i][s.ncols + i] = 1;

        uint32_t r = 0;
        s.pivot_col.assign(nrows, -1);
        for (uint32_t col = 0; col < s.ncols && r < nrows; ++col) {
            uint32_t piv = nrows;
            for (uint32_t i = r; i < nrows; ++i)
                if (s.rows[i][col] != 0) { piv = i; break; }
            if (piv == nrows) continue;
            std::swap(s.rows[r], s.rows[piv]);
            uint64_t inv = invmod_u64(s.rows[r][col], p);
            for (auto& v : s.rows[r]) v = mulmod_u64(v, inv, p);
            for (uint32_t i = 0; i < nrows; ++i) {
                if (i == r || s.rows[i][col] == 0) continue;
                uint64_t f = s.rows[i][col];
                for (uint32_t j = 0; j < s.ncols + nrows; ++j) {
                    uint64_t sub = mulmod_u64(f, s.rows[r][j], p);
                    s.rows[i][j] = (s.rows[i][j] + p - sub) % p;
                }
            }
            s.pivot_col[r] = static_cast<int>(col);
            ++r;
        }
        return s;
    }

    uint32_t rank() const {
        uint32_t r = 0;
        for (int pc : pivot_col)
            if (pc >= 0) ++r;
        return r;
    }

    std::optional<std::vector<uint64_t>> solve(const std::vector<uint64_t>& rhs) const {
        std::vector<uint64_t> x(ncols, 0);
        for (uint32_t i = 0; i < nrows; ++i) {
            uint64_t v = 0;
            for (uint32_t k = 0; k < nrows; ++k)
                v = (v + mulmod_u64(rows[i][ncols + k], rhs[k] % p, p)) % p;
            if (pivot_col[i] < 0) {
                if (v != 0) return std::nullopt;
            } else {
                x[static_cast<uint32_t>(pivot_col[i])] = v;
            }
        }
        return x;
    }
};

struct FieldKey {
    uint64_t p;
    uint32_t n;
    std::vector<uint64_t> modulus;
    bool operator<(const FieldKey& o) const {
        if (p != o.p) return p < o.p;
        if (n != o.n) return n < o.n;
        return modulus < o.modulus;
    }
};

std::mutex g_registry_mutex;
std::map<FieldKey, std::unique_ptr<Field>>& registry() {
    static std::map<FieldKey, std::unique_ptr<Field>> r;
    return r;
}

}  // namespace

namespace fppoly {

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly mul(const Poly& a, const Poly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + mulmod_u64(a[i], b[j], p)) % p;
    }
    return trim(std::move(c));
}

Poly rem(Poly a, const Poly& b, uint64_t p) {
    a = trim(std::move(a));
    if (b.empty()) throw std::invalid_argument("fppoly::rem by zero");
    uint64_t lead_inv = invmod_u64(b.back(), p);
    while (a.size() >= b.size()) {
        uint64_t t = mulmod_u64(a.back(), lead_inv, p);
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = mulmod_u64(t, b[i], p);
            a[off + i] = (a[off + i] + p - sub) % p;
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly gcd(Poly a, Poly b, uint64_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        uint64_t inv = invmod_u64(a.back(), p);
        for (auto& v : a) v = mulmod_u64(v, inv, p);
    }
    return a;
}

namespace {
Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
    return rem(mul(a, b, p), f, p);
}
Poly powmod_poly(Poly base, uint64_t e, const Poly& f, uint64_t p) {
    Poly acc{1};
    base = rem(std::move(base), f, p);
    while (e) {
        if (e & 1) acc = mulmod_poly(acc, base, f, p);
        base = mulmod_poly(base, base, f, p);
        e >>= 1;
    }
    return acc;
}
}  // namespace

Poly pow_xq_mod(const Poly& f, uint64_t p, uint32_t k) {
    Poly t{0, 1};  // x
    t = rem(std::move(t), f, p);
    for (uint32_t i = 0; i < k; ++i) t = powmod_poly(t, p, f, p);
    return t;
}

bool is_irreducible(const Poly& f_in, uint64_t p) {
    Poly f = trim(f_in);
    if (f.size() < 2) return false;
    uint32_t n = static_cast<uint32_t>(f.size() - 1);
    if (n == 1) return true;
    // x^{p^n} == x mod f, and gcd(x^{p^{n/d}} - x, f) == 1 for prime d | n.
    Poly t{0, 1};
    std::vector<Poly> frob_chain(n + 1);
    frob_chain[0] = rem(Poly{0, 1}, f, p);
    for (uint32_t i = 1; i <= n; ++i)
        frob_chain[i] = powmod_poly(frob_chain[i - 1], p, f, p);
    auto minus_x = [&](Poly g) {
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        return trim(std::move(g));
    };
    if (!minus_x(frob_chain[n]).empty()) return false;
    uint32_t m = n;
    for (uint32_t d = 2; d * d <= n; ++d) {
        if (m % d != 0) continue;
        while (m % d == 0) m /= d;
        Poly g = gcd(minus_x(frob_chain[n / d]), f, p);
        if (!(g.size() == 1 && g[0] == 1)) return false;
    }
    if (m > 1) {  // m is the last prime factor
        Poly g = gcd(minus_x(frob_chain[n / m]), f, p);
        if (!(g.size() == 1 && g[0] == 1)) return false;
    }
    return true;
}

}  // namespace fppoly

// ---------------------------------------------------------------------------
// Field

Field::Field(uint64_t p, uint32_t n, std::vector<uint64_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
    order_ = 1;
    for (uint32_t i = 0; i < n_; ++i) {
        if (order_ > (1ULL << 62) / p_)
            throw std::invalid_argument("field order exceeds 2^62");
        order_ *= p_;
    }
    if (p_ == 2) {
        if (n_ > 62) throw std::invalid_argument("GF(2^n) supported for n <= 62");
        for (uint32_t i = 0; i <= n_; ++i)
            if (modulus_[i]) mod_mask_ |= 1ULL << i;
    }
    if (p_ > (1ULL << 31)) throw std::invalid_argument("p too large");

    // Trace of power-basis vectors, via conjugate sums.
    trace_pow_.assign(n_, 0);
    for (uint32_t i = 0; i < n_; ++i) {
        FieldElement gi = (n_ == 1) ? from_uint(i == 0 ? 1 : 0)
                                    : gen().pow(i);
        FieldElement s = gi, t = gi;
        for (uint32_t k = 1; k < n_; ++k) {
            t = t.frobenius();
            s += t;
        }
        auto cs = s.coords();
        for (uint32_t j = 1; j < n_; ++j)
            if (cs[j] != 0) throw std::logic_error("trace not in prime field");
        trace_pow_[i] = cs[0];
        if (p_ == 2 && cs[0]) trace_mask_ |= 1ULL << i;
    }

    if (p_ == 2) {
        // z |-> z^2 + z as a GF(2)-linear map; solved form kept for
        // Artin-Schreier equations. Rows are flattened [A-part | T-part].
        std::vector<std::vector<uint64_t>> cols(n_);
        for (uint32_t j = 0; j < n_; ++j) {
            FieldElement e = from_coords([&] {
                std::vector<uint64_t> v(n_, 0);
                v[j] = 1;
                return v;
            }());
            FieldElement im = e.square() + e;
            cols[j] = im.coords();
        }
        FpSolver solver = FpSolver::build(cols, n_, 2);
        as_rows_.assign(static_cast<size_t>(n_) * 2 * n_, 0);
        for (uint32_t i = 0; i < n_; ++i)
            for (uint32_t j = 0; j < 2 * n_; ++j)
                as_rows_[i * 2 * n_ + j] = solver.rows[i][j];
        as_pivot_col_ = solver.pivot_col;
    }
    if (p_ > 2) {
        nonresidue_ = find_nonresidue();
        nonresidue_ready_ = true;
    }
}

const Field* Field::get(uint64_t p, uint32_t n) {
    if (!is_prime_u64(p)) throw std::invalid_argument("p is not prime");
    if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
    // Counting order: candidate value v encodes non-leading coefficients,
    // constant coefficient least significant.
    for (uint64_t v = 0;; ++v) {
        std::vector<uint64_t> mod(n + 1, 0);
        uint64_t t = v;
        for (uint32_t i = 0; i < n; ++i) {
            mod[i] = t % p;
            t /= p;
        }
        if (t != 0) throw std::runtime_error("no irreducible modulus found");
        mod[n] = 1;
        if (fppoly::is_irreducible(mod, p)) return get(p, n, mod);
    }
}

const Field* Field::get(uint64_t p, uint32_t n, const std::vector<uint64_t>& modulus) {
    if (!is_prime_u64(p)) throw std::invalid_argument("p is not prime");
    if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (modulus.size() != n + 1 || modulus[n] % p != 1)
        throw std::invalid_argument("modulus must be monic of degree n");
    std::vector<uint64_t> mod(modulus);
    for (auto& c : mod) c %= p;
    if (n >= 1 && !fppoly::is_irreducible(mod, p))
        throw std::invalid_argument("modulus is reducible");
    FieldKey key{p, n, mod};
    {
        std::lock_guard<std::mutex> lock(g_registry_mutex);
        auto it = registry().find(key);
        if (it != registry().end()) return it->second.get();
    }
    auto f = std::unique_ptr<Field>(new Field(p, n, mod));
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto [it, inserted] = registry().emplace(std::move(key), std::move(f));
    return it->second.get();
}

FieldElement Field::zero() const {
    if (p_ == 2 || n_ == 1) return FieldElement(this, uint64_t{0});
    return FieldElement(this, std::vector<uint64_t>(n_, 0));
}

FieldElement Field::one() const {
    if (p_ == 2 || n_ == 1) return FieldElement(this, uint64_t{1});
    std::vector<uint64_t> v(n_, 0);
    v[0] = 1;
    return FieldElement(this, std::move(v));
}

FieldElement Field::gen() const {
    if (n_ < 2) throw std::invalid_argument("gen() needs n >= 2");
    if (p_ == 2) return FieldElement(this, uint64_t{2});
    std::vector<uint64_t> v(n_, 0);
    v[1] = 1;
    return FieldElement(this, std::move(v));
}

FieldElement Field::from_coords(const std::vector<uint64_t>& coords) const {
    if (coords.size() != n_) throw std::invalid_argument("coordinate size mismatch");
    if (p_ == 2) {
        uint64_t bits = 0;
        for (uint32_t i = 0; i < n_; ++i)
            if (coords[i] & 1) bits |= 1ULL << i;
        return FieldElement(this, bits);
    }
    if (n_ == 1) return FieldElement(this, coords[0] % p_);
    std::vector<uint64_t> v(coords);
    for (auto& x : v) x %= p_;
    return FieldElement(this, std::move(v));
}

FieldElement Field::from_uint(uint64_t v) const {
    std::vector<uint64_t> coords(n_, 0);
    for (uint32_t i = 0; i < n_ && v; ++i) {
        coords[i] = v % p_;
        v /= p_;
    }
    if (v != 0) throw std::invalid_argument("value exceeds field order");
    return from_coords(coords);
}

FieldElement Field::from_int(int64_t v) const {
    int64_t m = static_cast<int64_t>(p_);
    int64_t r = v % m;
    if (r < 0) r += m;
    std::vector<uint64_t> coords(n_, 0);
    coords[0] = static_cast<uint64_t>(r);
    return from_coords(coords);
}

FieldElement Field::random_element(Rng& rng) const {
    std::vector<uint64_t> coords(n_);
    for (auto& c : coords) c = rng.below(p_);
    return from_coords(coords);
}

uint64_t Field::trace(const FieldElement& a) const {
    if (a.field() != this) throw std::invalid_argument("trace: wrong field");
    if (p_ == 2) return __builtin_parityll(a.s_ & trace_mask_);
    uint64_t acc = 0;
    auto cs = a.coords();
    for (uint32_t i = 0; i < n_; ++i)
        acc = (acc + mulmod_u64(cs[i], trace_pow_[i], p_)) % p_;
    return acc;
}

std::optional<FieldElement> Field::solve_artin_schreier(const FieldElement& c) const {
    if (p_ != 2) throw std::invalid_argument("artin-schreier solve needs p = 2");
    if (c.field() != this) throw std::invalid_argument("wrong field");
    auto rhs = c.coords();
    std::vector<uint64_t> x(n_, 0);
    for (uint32_t i = 0; i < n_; ++i) {
        uint64_t v = 0;
        for (uint32_t k = 0; k < n_; ++k)
            v ^= as_rows_[i * 2 * n_ + n_ + k] & rhs[k];
        v &= 1;
        if (as_pivot_col_[i] < 0) {
            if (v != 0) return std::nullopt;
        } else {
            x[static_cast<uint32_t>(as_pivot_col_[i])] = v;
        }
    }
    FieldElement z = from_coords(x);
    FieldElement z1 = z + one();
    return z.to_uint() <= z1.to_uint() ? z : z1;
}

std::optional<FieldElement> Field::sqrt(const FieldElement& a) const {
    if (a.field() != this) throw std::invalid_argument("wrong field");
    if (a.is_zero()) return a;
    if (p_ == 2) return a.pow(order_ >> 1);
    uint64_t q = order_;
    if (a.pow((q - 1) / 2) != one()) return std::nullopt;
    // Tonelli-Shanks on the multiplicative group of order q-1 = 2^s * t.
    uint64_t t = q - 1;
    uint32_t s = 0;
    while ((t & 1) == 0) {
        t >>= 1;
        ++s;
    }
    if (s == 1) return a.pow((q + 1) / 4);
    FieldElement z = from_uint(nonresidue_);
    FieldElement cc = z.pow(t);
    FieldElement x = a.pow((t + 1) / 2);
    FieldElement b = a.pow(t);
    uint32_t m = s;
    while (!b.is_one()) {
        uint32_t i = 0;
        FieldElement bb = b;
        while (!bb.is_one()) {
            bb = bb.square();
            ++i;
            if (i == m) return std::nullopt;  // unreachable for residues
        }
        FieldElement e = cc;
        for (uint32_t k = 0; k < m - i - 1; ++k) e = e.square();
        x *= e;
        cc = e.square();
        b *= cc;
        m = i;
    }
    return x;
}

uint64_t Field::find_nonresidue() const {
    for (uint64_t v = 2; v < order_; ++v) {
        FieldElement g = from_uint(v);
        if (g.is_zero()) continue;
        if (g.pow((order_ - 1) / 2) != one()) return v;
    }
    throw std::logic_error("no quadratic nonresidue found");
}

std::string Field::describe() const {
    std::ostringstream os;
    if (n_ == 1)
        os << "GF(" << p_ << ")";
    else
        os << "GF(" << p_ << "^" << n_ << ")";
    return os.str();
}

uint64_t Field::mul_small(uint64_t a, uint64_t b) const {
    unsigned __int128 acc = 0;
    uint64_t bb = b;
    while (bb) {
        int k = __builtin_ctzll(bb);
        acc ^= static_cast<unsigned __int128>(a) << k;
        bb &= bb - 1;
    }
    unsigned __int128 mod = mod_mask_;
    for (int i = 2 * static_cast<int>(n_) - 2; i >= static_cast<int>(n_); --i)
        if ((acc >> i) & 1) acc ^= mod << (i - n_);
    return static_cast<uint64_t>(acc);
}

void Field::mul_wide(const uint64_t* a, const uint64_t* b, uint64_t* out) const {
    uint32_t n = n_;
    std::vector<unsigned __int128> tmp(2 * n - 1, 0);
    for (uint32_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (uint32_t j = 0; j < n; ++j)
            tmp[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    }
    for (uint32_t i = 2 * n - 2; i >= n; --i) {
        uint64_t c = static_cast<uint64_t>(tmp[i] % p_);
        if (c == 0) continue;
        for (uint32_t j = 0; j < n; ++j) {
            uint64_t sub = mulmod_u64(c, modulus_[j], p_);
            tmp[i - n + j] += p_ - sub;
        }
        if (i == n) break;
    }
    for (uint32_t j = 0; j < n; ++j) out[j] = static_cast<uint64_t>(tmp[j] % p_);
}

// ---------------------------------------------------------------------------
// FieldElement

bool FieldElement::small_rep() const { return f_->p_ == 2 || f_->n_ == 1; }

void FieldElement::check_same(const FieldElement& o) const {
    if (f_ == nullptr || o.f_ == nullptr)
        throw std::invalid_argument("uninitialized field element");
    if (f_ != o.f_)
        throw std::invalid_argument("field mismatch between operands");
}

bool FieldElement::is_zero() const {
    if (small_rep()) return s_ == 0;
    return std::all_of(w_.begin(), w_.end(), [](uint64_t v) { return v == 0; });
}

bool FieldElement::is_one() const { return *this == f_->one(); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    if (f_->p_ == 2) return FieldElement(f_, s_ ^ o.s_);
    if (f_->n_ == 1) return FieldElement(f_, (s_ + o.s_) % f_->p_);
    std::vector<uint64_t> v(f_->n_);
    for (uint32_t i = 0; i < f_->n_; ++i) v[i] = (w_[i] + o.w_[i]) % f_->p_;
    return FieldElement(f_, std::move(v));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    if (f_->p_ == 2) return FieldElement(f_, s_ ^ o.s_);
    if (f_->n_ == 1) return FieldElement(f_, (s_ + f_->p_ - o.s_) % f_->p_);
    std::vector<uint64_t> v(f_->n_);
    for (uint32_t i = 0; i < f_->n_; ++i)
        v[i] = (w_[i] + f_->p_ - o.w_[i]) % f_->p_;
    return FieldElement(f_, std::move(v));
}

FieldElement FieldElement::operator-() const {
    if (f_->p_ == 2) return *this;
    if (f_->n_ == 1) return FieldElement(f_, (f_->p_ - s_) % f_->p_);
    std::vector<uint64_t> v(f_->n_);
    for (uint32_t i = 0; i < f_->n_; ++i) v[i] = (f_->p_ - w_[i]) % f_->p_;
    return FieldElement(f_, std::move(v));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    if (f_->p_ == 2) return FieldElement(f_, f_->mul_small(s_, o.s_));
    if (f_->n_ == 1) return FieldElement(f_, mulmod_u64(s_, o.s_, f_->p_));
    std::vector<uint64_t> v(f_->n_);
    f_->mul_wide(w_.data(), o.w_.data(), v.data());
    return FieldElement(f_, std::move(v));
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (f_ != o.f_) return false;
    if (small_rep()) return s_ == o.s_;
    return w_ == o.w_;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    return pow(f_->order_ - 2);
}

FieldElement FieldElement::pow(uint64_t e) const {
    FieldElement acc = f_->one();
    FieldElement t = *this;
    while (e) {
        if (e & 1) acc = acc * t;
        t = t * t;
        e >>= 1;
    }
    return acc;
}

FieldElement FieldElement::frobenius() const { return pow(f_->p_); }

std::vector<uint64_t> FieldElement::coords() const {
    std::vector<uint64_t> v(f_->n_, 0);
    if (f_->p_ == 2) {
        for (uint32_t i = 0; i < f_->n_; ++i) v[i] = (s_ >> i) & 1;
    } else if (f_->n_ == 1) {
        v[0] = s_;
    } else {
        v = w_;
    }
    return v;
}

uint64_t FieldElement::coord(uint32_t i) const {
    if (f_->p_ == 2) return (s_ >> i) & 1;
    if (f_->n_ == 1) return i == 0 ? s_ : 0;
    return w_[i];
}

uint64_t FieldElement::to_uint() const {
    if (f_->p_ == 2) return s_;
    if (f_->n_ == 1) return s_;
    uint64_t acc = 0;
    for (uint32_t i = f_->n_; i-- > 0;) acc = acc * f_->p_ + w_[i];
    return acc;
}

// ---------------------------------------------------------------------------
// Basis

Basis make_basis(std::vector<FieldElement> alphas) {
    if (alphas.empty()) throw std::invalid_argument("empty basis");
    const Field* f = alphas[0].field();
    uint32_t n = f->n();
    if (alphas.size() != n) throw std::invalid_argument("basis size must equal degree");
    std::vector<std::vector<uint64_t>> cols(n);
    for (uint32_t j = 0; j < n; ++j) {
        if (alphas[j].field() != f) throw std::invalid_argument("mixed fields in basis");
        cols[j] = alphas[j].coords();
    }
    FpSolver solver = FpSolver::build(cols, n, f->p());
    if (solver.rank() != n) throw std::invalid_argument("basis is rank-deficient");
    // Invert by solving against unit vectors once.
    std::vector<std::vector<uint64_t>> inv(n, std::vector<uint64_t>(n, 0));
    for (uint32_t k = 0; k < n; ++k) {
        std::vector<uint64_t> e(n, 0);
        e[k] = 1;
        auto x = solver.solve(e);
        for (uint32_t i = 0; i < n; ++i) inv[i][k] = (*x)[i];
    }
    Basis b;
    b.f_ = f;
    b.alphas_ = std::move(alphas);
    b.inv_ = std::move(inv);
    return b;
}

std::vector<uint64_t> Basis::coords_in(const FieldElement& a) const {
    if (a.field() != f_) throw std::invalid_argument("coords_in: wrong field");
    auto pc = a.coords();
    uint32_t n = f_->n();
    std::vector<uint64_t> out(n, 0);
    for (uint32_t i = 0; i < n; ++i) {
        uint64_t acc = 0;
        for (uint32_t j = 0; j < n; ++j)
            acc = (acc + mulmod_u64(inv_[i][j], pc[j], f_->p())) % f_->p();
        out[i] = acc;
    }
    return out;
}

FieldElement Basis::combine(const std::vector<uint64_t>& coords) const {
    if (coords.size() != alphas_.size())
        throw std::invalid_argument("combine: size mismatch");
    FieldElement acc = f_->zero();
    for (size_t j = 0; j < coords.size(); ++j)
        acc += f_->from_int(static_cast<int64_t>(coords[j] % f_->p())) * alphas_[j];
    return acc;
}

Basis power_basis(const Field* f) {
    std::vector<FieldElement> alphas;
    alphas.reserve(f->n());
    FieldElement cur = f->one();
    for (uint32_t i = 0; i < f->n(); ++i) {
        alphas.push_back(cur);
        if (i + 1 < f->n()) cur = (f->n() >= 2) ? cur * f->gen() : cur;
    }
    return make_basis(std::move(alphas));
}

Basis random_basis(const Field* f, Rng& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<FieldElement> alphas;
        for (uint32_t i = 0; i < f->n(); ++i) alphas.push_back(f->random_element(rng));
        try {
            return make_basis(std::move(alphas));
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::runtime_error("random_basis: repeated rank failures");
}

// ---------------------------------------------------------------------------
// QuadraticExtension

namespace {

// One root of f (squarefree, fully split over its coefficient field).
FieldElement find_root_split(UPoly f, Rng& rng) {
    const Field* F = f.f;
    uint64_t Q = F->order();
    while (f.deg() > 1) {
        FieldElement delta = F->random_element(rng);
        UPoly g = UPoly::zero(F);
        if (F->p() == 2) {
            // gcd with the half-trace form sum (delta z)^{2^i}.
            uint32_t bits = 0;
            for (uint64_t t = Q; t > 1; t >>= 1) ++bits;
            UPoly t = rem(UPoly::make(F, {F->zero(), delta}), f);
            UPoly acc = t;
            for (uint32_t i = 1; i < bits; ++i) {
                t = rem(t * t, f);
                acc = acc + t;
            }
            g = gcd_monic(f, acc);
        } else {
            UPoly zd = UPoly::make(F, {delta, F->one()});
            UPoly h = powmod(zd, (Q - 1) / 2, f);
            g = gcd_monic(f, h - UPoly::constant(F->one()));
        }
        if (g.deg() <= 0 || g.deg() >= f.deg()) continue;
        if (2 * g.deg() <= f.deg()) {
            f = g;
        } else {
            UPoly q;
            divmod(f, g, &q, nullptr);
            f = q;
        }
    }
    if (f.deg() != 1) throw std::logic_error("root finding failed");
    return -(f.c[0] / f.c[1]);
}

}  // namespace

QuadraticExtension::QuadraticExtension(const Field* base) : base_(base) {
    uint64_t p = base->p();
    uint32_t n = base->n();
    top_ = Field::get(p, 2 * n);

    // Root of the base modulus inside the top field.
    std::vector<FieldElement> m1;
    m1.reserve(n + 1);
    for (uint32_t i = 0; i <= n; ++i)
        m1.push_back(top_->from_int(static_cast<int64_t>(base->modulus()[i])));
    UPoly f = UPoly::make(top_, std::move(m1));
    Rng rng(Rng::mix(0x715eedc0de2026ULL, Rng::mix(p, n)));
    FieldElement rho = find_root_split(f, rng);

    rho_pow_.reserve(n);
    FieldElement cur = top_->one();
    for (uint32_t i = 0; i < n; ++i) {
        rho_pow_.push_back(cur);
        cur *= rho;
    }

    // sigma = Frobenius^n, precomputed as a GF(p)-linear map on coordinates.
    uint32_t N = 2 * n;
    sigma_mat_.assign(N, std::vector<uint64_t>(N, 0));
    for (uint32_t j = 0; j < N; ++j) {
        std::vector<uint64_t> unit(N, 0);
        unit[j] = 1;
        FieldElement img = top_->from_coords(unit).pow(base->order());
        auto cs = img.coords();
        for (uint32_t i = 0; i < N; ++i) sigma_mat_[i][j] = cs[i];
    }

    // Solver for projecting back through the embedding.
    std::vector<std::vector<uint64_t>> cols(n);
    for (uint32_t j = 0; j < n; ++j) cols[j] = rho_pow_[j].coords();
    FpSolver solver = FpSolver::build(cols, N, p);
    proj_rows_ = solver.rows;
    proj_pivots_ = solver.pivot_col;
}

FieldElement QuadraticExtension::embed(const FieldElement& a) const {
    if (a.field() != base_) throw std::invalid_argument("embed: wrong field");
    auto cs = a.coords();
    FieldElement acc = top_->zero();
    for (uint32_t i = 0; i < base_->n(); ++i)
        acc += top_->from_int(static_cast<int64_t>(cs[i])) * rho_pow_[i];
    return acc;
}

FieldElement QuadraticExtension::sigma(const FieldElement& b) const {
    if (b.field() != top_) throw std::invalid_argument("sigma: wrong field");
    auto cs = b.coords();
    uint32_t N = 2 * base_->n();
    uint64_t p = base_->p();
    std::vector<uint64_t> out(N, 0);
    for (uint32_t i = 0; i < N; ++i) {
        uint64_t acc = 0;
        for (uint32_t j = 0; j < N; ++j)
            acc = (acc + mulmod_u64(sigma_mat_[i][j], cs[j], p)) % p;
        out[i] = acc;
    }
    return top_->from_coords(out);
}

bool QuadraticExtension::in_base_image(const FieldElement& b) const {
    return sigma(b) == b;
}

const QuadraticExtension& quadratic_extension_of(const Field* base) {
    static std::mutex m;
    static std::map<const Field*, std::unique_ptr<QuadraticExtension>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(base);
    if (it == cache.end())
        it = cache.emplace(base, std::make_unique<QuadraticExtension>(base)).first;
    return *it->second;
}

std::optional<FieldElement> QuadraticExtension::project(const FieldElement& b) const {
    if (b.field() != top_) throw std::invalid_argument("project: wrong field");
    uint32_t n = base_->n();
    uint32_t N = 2 * n;
    uint64_t p = base_->p();
    auto rhs = b.coords();
    std::vector<uint64_t> x(n, 0);
    for (uint32_t i = 0; i < N; ++i) {
        uint64_t v = 0;
        for (uint32_t k = 0; k < N; ++k)
            v = (v + mulmod_u64(proj_rows_[i][n + k], rhs[k], p)) % p;
        if (proj_pivots_[i] < 0) {
            if (v != 0) return std::nullopt;
        } else {
            x[static_cast<uint32_t>(proj_pivots_[i])] = v;
        }
    }
    FieldElement a = base_->from_coords(x);
    if (embed(a) != b) return std::nullopt;
    return a;
}

}  // namespace semaev
