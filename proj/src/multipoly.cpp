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

#include "semaev/multipoly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace semaev {

namespace {

// Packed monomial keys: totdeg in the high bits, then the exponents of the
// variables from the last down to the second, each lane negated. Numeric
// order of keys is exactly grevlex, and keys add under monomial products.
struct PackSpec {
    bool ok = false;
    uint32_t nvars = 0;
    uint32_t lane_bits = 0;
    uint64_t lane_cap = 0;   // max exponent per lane
    uint32_t td_shift = 0;
    uint64_t td_cap = 0;

    uint64_t key(const Exponents& e) const {
        uint64_t td = 0;
        for (uint32_t x : e) td += x;
        uint64_t x = 0;
        for (uint32_t j = 1; j < nvars; ++j)
            x |= static_cast<uint64_t>(e[j]) << (lane_bits * (j - 1));
        return (td << td_shift) - x;
    }

    Exponents unpack(uint64_t k) const {
        // k = td * 2^td_shift - x with 0 <= x < 2^td_shift
        uint64_t mask = td_shift ? (1ULL << td_shift) - 1 : 0;
        uint64_t hi = k >> td_shift, lo = k & mask;
        uint64_t td = lo ? hi + 1 : hi;
        uint64_t x = lo ? (1ULL << td_shift) - lo : 0;
        Exponents e(nvars, 0);
        uint64_t rest = 0;
        for (uint32_t j = 1; j < nvars; ++j) {
            uint64_t v = (x >> (lane_bits * (j - 1))) & lane_cap;
            e[j] = static_cast<uint32_t>(v);
            rest += v;
        }
        if (rest > td) throw std::logic_error("packed key underflow");
        e[0] = static_cast<uint32_t>(td - rest);
        return e;
    }
};

// Spec valid for all monomials with per-variable exponents <= maxexp[v] and
// total degree <= tdmax.
PackSpec make_pack_spec(uint32_t nvars, const std::vector<uint32_t>& maxexp,
                        uint64_t tdmax) {
    PackSpec s;
    if (nvars == 0 || nvars > 13) return s;
    uint32_t need = 0;
    for (uint32_t v : maxexp) need = std::max(need, v);
    uint32_t lane_bits = 1;
    while ((1ULL << lane_bits) - 1 < need) ++lane_bits;
    if (nvars > 1 && lane_bits * (nvars - 1) > 48) return s;
    uint32_t td_shift = nvars > 1 ? lane_bits * (nvars - 1) : 0;
    if (63 - td_shift < 1) return s;
    uint64_t td_cap = (1ULL << (63 - td_shift)) - 1;
    if (tdmax > td_cap) return s;
    s.ok = true;
    s.nvars = nvars;
    s.lane_bits = lane_bits;
    s.lane_cap = (1ULL << lane_bits) - 1;
    s.td_shift = td_shift;
    s.td_cap = td_cap;
    return s;
}

std::vector<uint32_t> per_var_max(const MultiPoly& p) {
    std::vector<uint32_t> m(p.nvars(), 0);
    for (const auto& [e, c] : p.terms())
        for (size_t i = 0; i < e.size(); ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

}  // namespace

bool GrevlexLess::operator()(const Exponents& a, const Exponents& b) const {
    uint64_t da = 0, db = 0;
    for (uint32_t e : a) da += e;
    for (uint32_t e : b) db += e;
    if (da != db) return da < db;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = n; i-- > 0;) {
        uint32_t ai = i < a.size() ? a[i] : 0;
        uint32_t bi = i < b.size() ? b[i] : 0;
        if (ai != bi) return ai > bi;
    }
    return false;
}

MultiPoly::MultiPoly(const Field* f, std::vector<std::string> vars)
    : f_(f), vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(const Field* f, std::vector<std::string> vars,
                              const FieldElement& c) {
    MultiPoly r(f, std::move(vars));
    if (!c.is_zero()) r.terms_.emplace(Exponents(r.vars_.size(), 0), c);
    return r;
}

MultiPoly MultiPoly::variable(const Field* f, std::vector<std::string> vars,
                              uint32_t index) {
    MultiPoly r(f, std::move(vars));
    if (index >= r.vars_.size()) throw std::invalid_argument("variable index out of range");
    Exponents e(r.vars_.size(), 0);
    e[index] = 1;
    r.terms_.emplace(std::move(e), f->one());
    return r;
}

void MultiPoly::add_term(const Exponents& e, const FieldElement& c) {
    if (c.is_zero()) return;
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FieldElement MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? f_->zero() : it->second;
}

FieldElement MultiPoly::constant_term() const {
    return coefficient(Exponents(vars_.size(), 0));
}

uint32_t MultiPoly::total_degree() const {
    uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
        uint32_t s = 0;
        for (uint32_t x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

uint32_t MultiPoly::degree_in(uint32_t var) const {
    uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (f_ != o.f_) throw std::invalid_argument("multipoly field mismatch");
    if (vars_ != o.vars_) throw std::invalid_argument("multipoly variable list mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(f_, vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(f_, vars_);
    if (terms_.empty() || o.terms_.empty()) return r;

    // Fast path: packed 64-bit keys, hash accumulation, one final sort.
    if (terms_.size() * o.terms_.size() > 1024) {
        auto ma = per_var_max(*this), mb = per_var_max(o);
        std::vector<uint32_t> bound(vars_.size());
        uint64_t tdmax = 0;
        for (size_t i = 0; i < bound.size(); ++i) {
            bound[i] = ma[i] + mb[i];
            tdmax += bound[i];
        }
        PackSpec spec = make_pack_spec(nvars(), bound, tdmax);
        if (spec.ok) {
            std::vector<std::pair<uint64_t, FieldElement>> pa, pb;
            pa.reserve(terms_.size());
            pb.reserve(o.terms_.size());
            for (const auto& [e, c] : terms_) pa.emplace_back(spec.key(e), c);
            for (const auto& [e, c] : o.terms_) pb.emplace_back(spec.key(e), c);
            std::unordered_map<uint64_t, FieldElement> acc;
            acc.reserve(pa.size() + pb.size());
            for (const auto& [ka, ca] : pa) {
                for (const auto& [kb, cb] : pb) {
                    auto [it, fresh] = acc.try_emplace(ka + kb, f_->zero());
                    it->second += ca * cb;
                }
            }
            std::vector<std::pair<uint64_t, FieldElement>> out;
            out.reserve(acc.size());
            for (auto& [k, c] : acc)
                if (!c.is_zero()) out.emplace_back(k, std::move(c));
            std::sort(out.begin(), out.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            for (auto& [k, c] : out)
                r.terms_.emplace_hint(r.terms_.end(), spec.unpack(k), std::move(c));
            return r;
        }
    }

    Exponents tmp(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < tmp.size(); ++i) tmp[i] = ea[i] + eb[i];
            r.add_term(tmp, ca * cb);
        }
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (f_ != o.f_ || vars_ != o.vars_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

MultiPoly MultiPoly::scaled(const FieldElement& s) const {
    MultiPoly r(f_, vars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("evaluate: wrong number of values");
    // Per-variable power caches.
    std::vector<std::vector<FieldElement>> pows(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        uint32_t d = degree_in(static_cast<uint32_t>(i));
        pows[i].reserve(d + 1);
        pows[i].push_back(f_->one());
        for (uint32_t k = 1; k <= d; ++k) pows[i].push_back(pows[i].back() * point[i]);
    }
    FieldElement acc = f_->zero();
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= pows[i][e[i]];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(uint32_t var, const MultiPoly& value) const {
    check_compatible(value);
    uint32_t d = degree_in(var);
    std::vector<MultiPoly> vpow;
    vpow.reserve(d + 1);
    vpow.push_back(constant(f_, vars_, f_->one()));
    for (uint32_t k = 1; k <= d; ++k) vpow.push_back(vpow.back() * value);
    MultiPoly r(f_, vars_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        uint32_t k = rest[var];
        rest[var] = 0;
        for (const auto& [ev, cv] : vpow[k].terms_) {
            Exponents combined(vars_.size());
            for (size_t i = 0; i < combined.size(); ++i) combined[i] = rest[i] + ev[i];
            r.add_term(combined, c * cv);
        }
    }
    return r;
}

MultiPoly MultiPoly::substitute_const(uint32_t var, const FieldElement& value) const {
    uint32_t d = degree_in(var);
    std::vector<FieldElement> pow;
    pow.reserve(d + 1);
    pow.push_back(f_->one());
    for (uint32_t k = 1; k <= d; ++k) pow.push_back(pow.back() * value);
    MultiPoly r(f_, vars_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        uint32_t k = rest[var];
        rest[var] = 0;
        r.add_term(rest, c * pow[k]);
    }
    return r;
}

MultiPoly MultiPoly::coeff_of(uint32_t var, uint32_t k) const {
    MultiPoly r(f_, vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != k) continue;
        Exponents rest = e;
        rest[var] = 0;
        r.terms_.emplace(std::move(rest), c);
    }
    return r;
}

MultiPoly MultiPoly::reduce_mod_field_equations(uint64_t q) const {
    MultiPoly r(f_, vars_);
    for (const auto& [e, c] : terms_) {
        Exponents red = e;
        for (auto& x : red)
            if (x >= q) x = static_cast<uint32_t>((x - 1) % (q - 1)) + 1;
        r.add_term(red, c);
    }
    return r;
}

MultiPoly MultiPoly::frobenius_lift() const {
    uint64_t p = f_->p();
    MultiPoly r(f_, vars_);
    for (const auto& [e, c] : terms_) {
        Exponents lifted = e;
        for (auto& x : lifted) {
            uint64_t nx = static_cast<uint64_t>(x) * p;
            if (nx > 0xffffffffULL) throw std::overflow_error("exponent overflow");
            x = static_cast<uint32_t>(nx);
        }
        r.add_term(lifted, c.pow(p));
    }
    return r;
}

MultiPoly MultiPoly::relabel(std::vector<std::string> new_vars,
                             const std::vector<uint32_t>& where) const {
    if (where.size() != vars_.size()) throw std::invalid_argument("relabel map size");
    MultiPoly r(f_, std::move(new_vars));
    for (const auto& [e, c] : terms_) {
        Exponents ne(r.vars_.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            ne[where[i]] += e[i];
        }
        r.add_term(ne, c);
    }
    return r;
}

uint32_t MultiPoly::index_of(const std::string& var) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var) return static_cast<uint32_t>(i);
    throw std::invalid_argument("unknown variable " + var);
}

namespace {

struct CoeffText {
    bool negative = false;
    std::string text;  // empty = implicit 1
};

CoeffText coeff_text(const Field* f, const FieldElement& c, bool is_constant_term) {
    CoeffText out;
    if (f->n() == 1) {
        uint64_t v = c.coord(0);
        uint64_t mag = v;
        if (f->p() > 2 && v > f->p() / 2) {
            out.negative = true;
            mag = f->p() - v;
        }
        if (mag != 1 || is_constant_term) out.text = std::to_string(mag);
    } else {
        std::ostringstream os;
        auto cs = c.coords();
        os << "{";
        for (size_t i = 0; i < cs.size(); ++i) {
            if (i) os << ",";
            os << cs[i];
        }
        os << "}";
        out.text = os.str();
    }
    return out;
}

}  // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        CoeffText ct = coeff_text(f_, c, mono.empty());
        if (first) {
            if (ct.negative) os << "-";
            first = false;
        } else {
            os << (ct.negative ? " - " : " + ");
        }
        if (ct.text.empty()) {
            os << mono;
        } else {
            os << ct.text;
            if (!mono.empty()) os << "*" << mono;
        }
    }
    return os.str();
}

MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
    MultiPoly q(num.field(), num.vars());
    if (num.is_zero()) return q;
    const Field* f = num.field();

    // Packed fast path: remainder kept in a key-ordered map. Cancellation in
    // num can hide wide intermediate exponents, so every quotient step checks
    // that the next block of keys stays inside the lanes; on failure the slow
    // path takes over.
    if (num.terms().size() > 256) {
        auto nb = per_var_max(num);
        auto db = per_var_max(den);
        std::vector<uint32_t> bound(num.nvars());
        uint64_t tdmax = 0, den_td = 0;
        for (size_t i = 0; i < bound.size(); ++i) {
            bound[i] = nb[i] + db[i];
            tdmax += bound[i];
            den_td += db[i];
        }
        PackSpec spec = make_pack_spec(num.nvars(), bound, tdmax);
        auto packed_attempt = [&]() -> std::optional<MultiPoly> {
            std::map<uint64_t, FieldElement> r;
            for (const auto& [e, c] : num.terms())
                r.emplace_hint(r.end(), spec.key(e), c);
            std::vector<std::pair<uint64_t, FieldElement>> d;
            d.reserve(den.terms().size());
            for (const auto& [e, c] : den.terms()) d.emplace_back(spec.key(e), c);
            std::sort(d.begin(), d.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            uint64_t dlead_key = d.back().first;
            FieldElement dinv = d.back().second.inv();
            std::vector<std::pair<uint64_t, FieldElement>> quot;
            while (!r.empty()) {
                auto rl = std::prev(r.end());
                if (rl->first < dlead_key)
                    throw std::logic_error("divide_exact: not divisible");
                uint64_t qkey = rl->first - dlead_key;
                Exponents qe = spec.unpack(qkey);
                if (spec.key(qe) != qkey)
                    throw std::logic_error("divide_exact: not divisible");
                uint64_t qtd = 0;
                for (size_t v = 0; v < qe.size(); ++v) {
                    if (v > 0 && qe[v] + db[v] > spec.lane_cap) return std::nullopt;
                    qtd += qe[v];
                }
                if (qtd + den_td > spec.td_cap) return std::nullopt;
                FieldElement factor = rl->second * dinv;
                quot.emplace_back(qkey, factor);
                for (const auto& [dk, dc] : d) {
                    uint64_t k = dk + qkey;
                    auto [it, fresh] = r.try_emplace(k, f->zero());
                    it->second -= factor * dc;
                    if (it->second.is_zero()) r.erase(it);
                }
            }
            MultiPoly out(num.field(), num.vars());
            for (auto it = quot.rbegin(); it != quot.rend(); ++it)
                out.add_term(spec.unpack(it->first), it->second);
            return out;
        };
        if (spec.ok) {
            auto res = packed_attempt();
            if (res) return *res;
        }
    }

    MultiPoly r = num;
    const auto& dlead = *den.terms().rbegin();
    FieldElement dinv = dlead.second.inv();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        Exponents shift(rlead.first.size());
        for (size_t i = 0; i < shift.size(); ++i) {
            if (rlead.first[i] < dlead.first[i])
                throw std::logic_error("divide_exact: not divisible");
            shift[i] = rlead.first[i] - dlead.first[i];
        }
        FieldElement factor = rlead.second * dinv;
        q.add_term(shift, factor);
        // r -= factor * shift * den
        Exponents tmp(shift.size());
        for (const auto& [e, c] : den.terms()) {
            for (size_t i = 0; i < tmp.size(); ++i) tmp[i] = e[i] + shift[i];
            r.add_term(tmp, -(factor * c));
        }
    }
    return q;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, uint32_t var) {
    if (f.field() != g.field() || f.vars() != g.vars())
        throw std::invalid_argument("resultant: incompatible polynomials");
    uint32_t df = f.degree_in(var), dg = g.degree_in(var);
    if (df == 0 || dg == 0)
        throw std::invalid_argument("resultant: degree 0 in the chosen variable");
    uint32_t dim = df + dg;
    const Field* F = f.field();
    MultiPoly zero(F, f.vars());
    MultiPoly one = MultiPoly::constant(F, f.vars(), F->one());

    std::vector<MultiPoly> m(static_cast<size_t>(dim) * dim, zero);
    auto at = [&](uint32_t i, uint32_t j) -> MultiPoly& { return m[i * dim + j]; };
    for (uint32_t i = 0; i < dg; ++i)
        for (uint32_t j = 0; j <= df; ++j) at(i, i + j) = f.coeff_of(var, df - j);
    for (uint32_t i = 0; i < df; ++i)
        for (uint32_t j = 0; j <= dg; ++j) at(dg + i, i + j) = g.coeff_of(var, dg - j);

    bool neg = false;
    MultiPoly prev = one;
    for (uint32_t k = 0; k + 1 < dim; ++k) {
        if (at(k, k).is_zero()) {
            uint32_t r = dim;
            for (uint32_t i = k + 1; i < dim; ++i)
                if (!at(i, k).is_zero()) { r = i; break; }
            if (r == dim) return zero;
            for (uint32_t j = 0; j < dim; ++j) std::swap(at(k, j), at(r, j));
            neg = !neg;
        }
        for (uint32_t i = k + 1; i < dim; ++i) {
            for (uint32_t j = k + 1; j < dim; ++j) {
                MultiPoly numer = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                at(i, j) = numer.is_zero() ? zero : divide_exact(numer, prev);
            }
            at(i, k) = zero;
        }
        prev = at(k, k);
    }
    MultiPoly det = at(dim - 1, dim - 1);
    return neg ? -det : det;
}

}  // namespace semaev
