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

#include "semaev/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "semaev/gbprofiler.hpp"

namespace semaev {

// ---------------------------------------------------------------------------
// DIMACS

DimacsError::DimacsError(const std::string& msg, uint32_t line, uint32_t col)
    : std::runtime_error("dimacs:" + std::to_string(line) + ":" + std::to_string(col) +
                         ": " + msg),
      line(line),
      col(col) {}

namespace {

struct Scanner {
    const std::string& text;
    size_t pos = 0;
    uint32_t line = 1, col = 1;

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    bool eof() const { return pos >= text.size(); }

    void skip_space_and_comments() {
        while (!eof()) {
            if (std::isspace(static_cast<unsigned char>(text[pos]))) {
                advance();
            } else if (text[pos] == 'c' && (col == 1)) {
                while (!eof() && text[pos] != '\n') advance();
            } else {
                break;
            }
        }
    }

    // next whitespace-delimited token; line/col of its start reported
    std::string token(uint32_t* tl, uint32_t* tc) {
        skip_space_and_comments();
        *tl = line;
        *tc = col;
        std::string t;
        while (!eof() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
            t += text[pos];
            advance();
        }
        return t;
    }
};

int64_t parse_int_token(const std::string& t, uint32_t tl, uint32_t tc) {
    if (t.empty()) throw DimacsError("unexpected end of input", tl, tc);
    size_t idx = 0;
    int64_t v = 0;
    try {
        v = std::stoll(t, &idx);
    } catch (...) {
        throw DimacsError("expected an integer, got '" + t + "'", tl, tc);
    }
    if (idx != t.size())
        throw DimacsError("expected an integer, got '" + t + "'", tl, tc);
    return v;
}

}  // namespace

SatInstance parse_dimacs(const std::string& text) {
    Scanner sc{text};
    uint32_t tl, tc;
    std::string tok = sc.token(&tl, &tc);
    if (tok != "p") throw DimacsError("expected 'p cnf' header", tl, tc);
    tok = sc.token(&tl, &tc);
    if (tok != "cnf") throw DimacsError("expected 'cnf' after 'p'", tl, tc);
    int64_t nv = parse_int_token(sc.token(&tl, &tc), tl, tc);
    int64_t nc = parse_int_token(sc.token(&tl, &tc), tl, tc);
    if (nv < 0 || nv > 100000) throw DimacsError("variable count out of range", tl, tc);
    if (nc < 0 || nc > 100000) throw DimacsError("clause count out of range", tl, tc);

    SatInstance sat;
    sat.num_vars = static_cast<uint32_t>(nv);
    std::vector<int32_t> current;
    uint32_t clause_line = tl, clause_col = tc;
    while (static_cast<int64_t>(sat.clauses.size()) < nc) {
        std::string t = sc.token(&tl, &tc);
        if (t.empty())
            throw DimacsError("non-terminated clause (unexpected end of input)", tl, tc);
        int64_t lit = parse_int_token(t, tl, tc);
        if (current.empty()) {
            clause_line = tl;
            clause_col = tc;
        }
        if (lit == 0) {
            if (current.empty())
                throw DimacsError("empty clause", clause_line, clause_col);
            if (current.size() > 3)
                throw DimacsError("clause has more than 3 literals", clause_line, clause_col);
            while (current.size() < 3) current.push_back(current.front());
            sat.clauses.push_back({current[0], current[1], current[2]});
            current.clear();
        } else {
            if (std::llabs(lit) > nv)
                throw DimacsError("literal references a variable out of range", tl, tc);
            current.push_back(static_cast<int32_t>(lit));
        }
    }
    if (!current.empty())
        throw DimacsError("non-terminated clause (unexpected end of input)", sc.line, sc.col);
    sc.skip_space_and_comments();
    if (!sc.eof()) {
        uint32_t el, ec;
        sc.token(&el, &ec);
        throw DimacsError("trailing content after the declared clauses", el, ec);
    }
    return sat;
}

bool sat_check(const SatInstance& sat, const std::vector<bool>& assignment) {
    if (assignment.size() != sat.num_vars) return false;
    for (const auto& cl : sat.clauses) {
        bool ok = false;
        for (int32_t lit : cl) {
            uint32_t var = static_cast<uint32_t>(std::abs(lit)) - 1;
            bool val = assignment[var];
            if ((lit > 0 && val) || (lit < 0 && !val)) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

std::optional<std::vector<bool>> sat_solve(const SatInstance& sat) {
    if (sat.num_vars > 24) throw std::invalid_argument("sat_solve capped at 24 variables");
    uint32_t s = sat.num_vars;
    uint64_t total = 1ULL << s;
    for (uint64_t counter = 0; counter < total; ++counter) {
        std::vector<bool> a(s);
        for (uint32_t i = 0; i < s; ++i) a[i] = (counter >> (s - 1 - i)) & 1;
        if (sat_check(sat, a)) return a;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subset sum oracles

namespace {

// mod-m vectors packed in 4-bit lanes across two words (dim <= 32, m <= 8,
// so lane sums never overflow); canonical keys use 2-bit lanes when m = 3,
// raw lanes otherwise.
struct VecPack {
    uint64_t m;
    uint32_t dim;

    using W = std::pair<uint64_t, uint64_t>;

    static constexpr uint64_t kLow = 0x1111111111111111ULL;

    W from(const std::vector<uint32_t>& v) const {
        W w{0, 0};
        for (uint32_t i = 0; i < dim; ++i) {
            uint64_t lane = v[i] % m;
            if (i < 16) w.first |= lane << (4 * i);
            else w.second |= lane << (4 * (i - 16));
        }
        return w;
    }

    uint64_t reduce_word(uint64_t u) const {
        // lanes hold values <= 2(m-1) <= 14; bit 3 of lane + (8-m) flags
        // lanes >= m, which get one subtraction of m
        uint64_t probe = (8 - m) * kLow;
        uint64_t hi = (u + probe) & (8 * kLow);
        uint64_t t = hi >> 3;
        return u - t * m;
    }

    W add(W a, W b) const {
        return {reduce_word(a.first + b.first), reduce_word(a.second + b.second)};
    }

    uint64_t key(W w) const {
        uint32_t bits = m <= 4 ? 2 : 3;
        uint64_t k = 0;
        for (uint32_t i = 0; i < dim; ++i) {
            uint64_t lane = (i < 16) ? (w.first >> (4 * i)) & 0xf
                                     : (w.second >> (4 * (i - 16))) & 0xf;
            k |= lane << (bits * i);
        }
        return k;
    }
};

std::vector<uint32_t> mask_to_indices(uint64_t mask) {
    std::vector<uint32_t> out;
    while (mask) {
        out.push_back(static_cast<uint32_t>(__builtin_ctzll(mask)));
        mask &= mask - 1;
    }
    return out;
}

std::optional<std::vector<uint32_t>> subset_solve_int(const SubsetSumInstance& inst) {
    const auto& e = inst.int_elements;
    uint32_t n = static_cast<uint32_t>(e.size());
    if (n <= 20) {
        for (uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            int64_t s = 0;
            for (uint64_t b = mask; b; b &= b - 1) s += e[__builtin_ctzll(b)];
            if (s == inst.int_target) return mask_to_indices(mask);
        }
        return std::nullopt;
    }
    uint32_t na = n / 2, nb = n - na;
    std::vector<int64_t> sa(1ULL << na, 0), sb(1ULL << nb, 0);
    for (uint64_t mask = 1; mask < (1ULL << na); ++mask)
        sa[mask] = sa[mask & (mask - 1)] + e[__builtin_ctzll(mask)];
    for (uint64_t mask = 1; mask < (1ULL << nb); ++mask)
        sb[mask] = sb[mask & (mask - 1)] + e[na + __builtin_ctzll(mask)];
    std::unordered_map<int64_t, uint64_t> amin;
    amin.reserve(sa.size());
    for (uint64_t mask = 0; mask < sa.size(); ++mask) amin.try_emplace(sa[mask], mask);
    for (uint64_t bmask = 0; bmask < sb.size(); ++bmask) {
        auto it = amin.find(inst.int_target - sb[bmask]);
        if (it != amin.end()) return mask_to_indices(it->second | (bmask << na));
    }
    return std::nullopt;
}

std::optional<std::vector<uint32_t>> subset_solve_vec(const SubsetSumInstance& inst) {
    const auto& e = inst.vec_elements;
    uint32_t n = static_cast<uint32_t>(e.size());
    uint64_t m = inst.modulus;
    uint32_t dim = inst.dim;
    auto add_vec = [&](std::vector<uint32_t> a, const std::vector<uint32_t>& b) {
        for (uint32_t i = 0; i < dim; ++i) a[i] = (a[i] + b[i]) % m;
        return a;
    };
    if (n <= 20) {
        for (uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            std::vector<uint32_t> s(dim, 0);
            for (uint64_t b = mask; b; b &= b - 1) s = add_vec(s, e[__builtin_ctzll(b)]);
            if (s == inst.vec_target) return mask_to_indices(mask);
        }
        return std::nullopt;
    }
    if (m > 8 || dim > 32 || (m > 4 && dim > 21))
        throw std::invalid_argument(
            "subset oracle: this size/modulus combination is beyond the packed search");
    VecPack pk{m, dim};
    uint32_t na = n / 2, nb = n - na;
    std::vector<VecPack::W> sa(1ULL << na, {0, 0}), sb(1ULL << nb, {0, 0});
    std::vector<VecPack::W> ea, eb;
    for (uint32_t i = 0; i < na; ++i) ea.push_back(pk.from(e[i]));
    for (uint32_t i = na; i < n; ++i) eb.push_back(pk.from(e[i]));
    for (uint64_t mask = 1; mask < sa.size(); ++mask)
        sa[mask] = pk.add(sa[mask & (mask - 1)], ea[__builtin_ctzll(mask)]);
    for (uint64_t mask = 1; mask < sb.size(); ++mask)
        sb[mask] = pk.add(sb[mask & (mask - 1)], eb[__builtin_ctzll(mask)]);
    std::unordered_map<uint64_t, uint64_t> amin;
    amin.reserve(sa.size());
    for (uint64_t mask = 0; mask < sa.size(); ++mask)
        amin.try_emplace(pk.key(sa[mask]), mask);
    // need key(target - sumB): target + (m-1)*sumB lane-wise
    VecPack::W target = pk.from(inst.vec_target);
    for (uint64_t bmask = 0; bmask < sb.size(); ++bmask) {
        VecPack::W need = target;
        VecPack::W sbv = sb[bmask];
        for (uint64_t r = 1; r < m; ++r) need = pk.add(need, sbv);  // target - s = target + (m-1) s
        auto it = amin.find(pk.key(need));
        if (it != amin.end()) return mask_to_indices(it->second | (bmask << na));
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<uint32_t>> subset_solve(const SubsetSumInstance& inst) {
    if (inst.size() > 44)
        throw std::invalid_argument("subset oracle capped at 44 elements");
    if (inst.kind == SubsetSumInstance::Kind::Integers) return subset_solve_int(inst);
    if (inst.modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    for (const auto& v : inst.vec_elements)
        if (v.size() != inst.dim) throw std::invalid_argument("vector arity mismatch");
    if (inst.vec_target.size() != inst.dim)
        throw std::invalid_argument("target arity mismatch");
    return subset_solve_vec(inst);
}

bool subset_check(const SubsetSumInstance& inst, const std::vector<uint32_t>& chosen) {
    for (size_t i = 1; i < chosen.size(); ++i)
        if (chosen[i] <= chosen[i - 1]) return false;
    if (inst.kind == SubsetSumInstance::Kind::Integers) {
        int64_t s = 0;
        for (uint32_t i : chosen) {
            if (i >= inst.int_elements.size()) return false;
            s += inst.int_elements[i];
        }
        return s == inst.int_target;
    }
    std::vector<uint32_t> s(inst.dim, 0);
    for (uint32_t i : chosen) {
        if (i >= inst.vec_elements.size()) return false;
        for (uint32_t j = 0; j < inst.dim; ++j)
            s[j] = (s[j] + inst.vec_elements[i][j]) % static_cast<uint32_t>(inst.modulus);
    }
    return s == inst.vec_target;
}

// ---------------------------------------------------------------------------
// Gadgets and SAT -> subset sum

Gadget gadget_for(uint64_t m) {
    if (m < 3) throw std::invalid_argument("subset sum over (Z/2Z)^n is plain linear algebra; m >= 3 required");
    Gadget g;
    g.m = m;
    if (m == 3) {
        g.r = 3;
        g.k = 5;
        g.c = {{2, 1, 2}, {2, 2, 2}, {2, 0, 1}};
        g.t = {2, 0, 1};
        auto sub = [&](std::vector<uint32_t> a, const std::vector<uint32_t>& b) {
            for (uint32_t i = 0; i < 3; ++i) a[i] = (a[i] + 3 - b[i] % 3) % 3;
            return a;
        };
        g.d.push_back(sub(g.t, g.c[0]));
        g.d.push_back(sub(g.t, g.c[1]));
        g.d.push_back(sub(sub(g.t, g.c[0]), g.c[1]));
        g.d.push_back(sub(sub(g.t, g.c[0]), g.c[2]));
        g.d.push_back(sub(sub(g.t, g.c[1]), g.c[2]));
    } else {
        g.r = 1;
        g.k = 2;
        g.c = {{1}, {1}, {1}};
        g.d = {{1}, {1}};
        g.t = {static_cast<uint32_t>(3 % m)};
    }
    return g;
}

bool audit_gadget(const Gadget& g) {
    auto add = [&](std::vector<uint32_t> a, const std::vector<uint32_t>& b) {
        for (uint32_t i = 0; i < g.r; ++i)
            a[i] = static_cast<uint32_t>((a[i] + b[i]) % g.m);
        return a;
    };
    // (b): no subset of the d's alone reaches t
    for (uint32_t dmask = 0; dmask < (1u << g.k); ++dmask) {
        std::vector<uint32_t> s(g.r, 0);
        for (uint32_t i = 0; i < g.k; ++i)
            if ((dmask >> i) & 1) s = add(s, g.d[i]);
        if (s == g.t) return false;
    }
    // (a): every nonempty C is completable
    for (uint32_t cmask = 1; cmask < 8; ++cmask) {
        std::vector<uint32_t> base(g.r, 0);
        for (uint32_t i = 0; i < 3; ++i)
            if ((cmask >> i) & 1) base = add(base, g.c[i]);
        bool done = false;
        for (uint32_t dmask = 0; dmask < (1u << g.k) && !done; ++dmask) {
            std::vector<uint32_t> s = base;
            for (uint32_t i = 0; i < g.k; ++i)
                if ((dmask >> i) & 1) s = add(s, g.d[i]);
            if (s == g.t) done = true;
        }
        if (!done) return false;
    }
    return true;
}

namespace {

// first-occurrence position (1..3) of a literal in a clause, 0 if absent
uint32_t first_position(const std::array<int32_t, 3>& clause, int32_t lit) {
    for (uint32_t p = 0; p < 3; ++p)
        if (clause[p] == lit) return p + 1;
    return 0;
}

}  // namespace

ModReduction sat_to_subsetsum_modm(const SatInstance& sat, uint64_t m) {
    ModReduction red;
    red.gadget = gadget_for(m);
    red.s = sat.num_vars;
    red.w = static_cast<uint32_t>(sat.clauses.size());
    const Gadget& g = red.gadget;

    uint32_t dim = red.s + g.r * red.w;
    auto& inst = red.instance;
    inst.kind = SubsetSumInstance::Kind::ModVec;
    inst.modulus = m;
    inst.dim = dim;

    auto literal_vector = [&](int32_t lit) {
        std::vector<uint32_t> v(dim, 0);
        uint32_t var = static_cast<uint32_t>(std::abs(lit)) - 1;
        v[var] = 1;
        for (uint32_t j = 0; j < red.w; ++j) {
            uint32_t pos = first_position(sat.clauses[j], lit);
            if (pos == 0) continue;
            for (uint32_t i = 0; i < g.r; ++i)
                v[red.s + g.r * j + i] = g.c[pos - 1][i];
        }
        return v;
    };

    for (uint32_t var = 1; var <= red.s; ++var) {
        inst.vec_elements.push_back(literal_vector(static_cast<int32_t>(var)));
        inst.vec_elements.push_back(literal_vector(-static_cast<int32_t>(var)));
    }
    for (uint32_t j = 0; j < red.w; ++j) {
        for (uint32_t i = 0; i < g.k; ++i) {
            std::vector<uint32_t> v(dim, 0);
            for (uint32_t x = 0; x < g.r; ++x) v[red.s + g.r * j + x] = g.d[i][x];
            inst.vec_elements.push_back(std::move(v));
        }
    }
    inst.vec_target.assign(dim, 0);
    for (uint32_t var = 0; var < red.s; ++var) inst.vec_target[var] = 1;
    for (uint32_t j = 0; j < red.w; ++j)
        for (uint32_t i = 0; i < g.r; ++i) inst.vec_target[red.s + g.r * j + i] = g.t[i];
    return red;
}

IntReduction sat_to_subsetsum_int(const SatInstance& sat) {
    IntReduction red;
    red.s = sat.num_vars;
    red.w = static_cast<uint32_t>(sat.clauses.size());
    uint32_t dim = red.s + red.w;
    if (dim > 20)
        throw std::invalid_argument("integer route capped at 20 radix-8 digits");

    auto pack = [&](const std::vector<uint32_t>& digits) {
        int64_t v = 0;
        for (uint32_t i = dim; i-- > 0;) v = v * 8 + digits[i];
        return v;
    };
    auto literal_digits = [&](int32_t lit) {
        std::vector<uint32_t> v(dim, 0);
        v[static_cast<uint32_t>(std::abs(lit)) - 1] = 1;
        for (uint32_t j = 0; j < red.w; ++j)
            if (first_position(sat.clauses[j], lit)) v[red.s + j] = 1;
        return v;
    };

    auto& inst = red.instance;
    inst.kind = SubsetSumInstance::Kind::Integers;
    for (uint32_t var = 1; var <= red.s; ++var) {
        inst.int_elements.push_back(pack(literal_digits(static_cast<int32_t>(var))));
        inst.int_elements.push_back(pack(literal_digits(-static_cast<int32_t>(var))));
    }
    for (uint32_t j = 0; j < red.w; ++j) {
        std::vector<uint32_t> v(dim, 0);
        v[red.s + j] = 1;
        inst.int_elements.push_back(pack(v));
        inst.int_elements.push_back(pack(v));
    }
    std::vector<uint32_t> t(dim, 0);
    for (uint32_t var = 0; var < red.s; ++var) t[var] = 1;
    for (uint32_t j = 0; j < red.w; ++j) t[red.s + j] = 3;
    inst.int_target = pack(t);
    return red;
}

// ---------------------------------------------------------------------------
// Subset sum -> summation polynomial instances

EcReduction subsetsum_to_sumpoly_ec(const SubsetSumInstance& inst, uint64_t seed) {
    if (inst.kind != SubsetSumInstance::Kind::Integers)
        throw std::invalid_argument("elliptic route needs an integer instance");
    EcReduction red;
    int64_t sum = 0, abs_sum = 0;
    for (uint32_t i = 0; i < inst.int_elements.size(); ++i) {
        int64_t v = inst.int_elements[i];
        if (v == 0) {
            red.zero_elements.push_back(i);
            continue;
        }
        red.v.push_back(v);
        sum += v;
        abs_sum += std::llabs(v);
    }
    red.wprime = 2 * inst.int_target - sum;
    red.wprime_zero = red.wprime == 0;

    uint64_t bound = static_cast<uint64_t>(abs_sum) * 2 + 1;
    // the target may sit outside [-sum |v|, sum |v|]; the group order must
    // separate every +-combination from w' as integers
    bound = std::max<uint64_t>(bound,
                               static_cast<uint64_t>(std::llabs(red.wprime)) +
                                   static_cast<uint64_t>(abs_sum) + 1);
    if (bound > (1ULL << 20))
        throw CapExceeded("curve order bound above the desk-scale cap of 2^20");
    red.curve = find_curve_with_large_order_point(bound, seed);

    std::vector<FieldElement> inputs;
    for (int64_t v : red.v)
        inputs.push_back(scalar_mul(red.curve.model, v, red.curve.point).x());
    if (!red.wprime_zero)
        inputs.push_back(scalar_mul(red.curve.model, red.wprime, red.curve.point).x());
    red.instance = SummationInstance{red.curve.model, std::move(inputs)};
    return red;
}

CuspReduction subsetsum_to_sumpoly_cusp(const SubsetSumInstance& inst) {
    if (inst.kind != SubsetSumInstance::Kind::ModVec)
        throw std::invalid_argument("cuspidal route needs a vector instance");
    uint64_t p = inst.modulus;
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("cuspidal route needs an odd prime modulus");
    if (inst.dim < 1 || inst.dim > 24)
        throw std::invalid_argument("cuspidal route: dimension must be 1..24");

    CuspReduction red;
    red.field = Field::get(p, inst.dim);
    const Field* f = red.field;

    auto to_field = [&](const std::vector<uint32_t>& v) {
        std::vector<uint64_t> coords(v.begin(), v.end());
        return f->from_coords(coords);
    };

    FieldElement sum = f->zero();
    for (uint32_t i = 0; i < inst.vec_elements.size(); ++i) {
        FieldElement e = to_field(inst.vec_elements[i]);
        if (e.is_zero()) {
            red.zero_elements.push_back(i);
            continue;
        }
        red.v.push_back(e);
        sum += e;
    }
    FieldElement target = to_field(inst.vec_target);
    red.wprime = target + target - sum;
    red.wprime_zero = red.wprime.is_zero();

    std::vector<FieldElement> inputs;
    for (const auto& e : red.v) inputs.push_back((e * e).inv());
    if (!red.wprime_zero) inputs.push_back((red.wprime * red.wprime).inv());
    red.instance = SummationInstance{cuspidal_model(f), std::move(inputs)};
    return red;
}

// ---------------------------------------------------------------------------
// Sign searches

namespace {

// Sum over +-1 signs equals w' iff the set of flipped indices solves a
// derived subset-sum instance with elements -2 v_i and target w' - sum v_i.
template <typename MakeInstance>
std::optional<std::vector<int8_t>> sign_solve_common(size_t count, MakeInstance make) {
    SubsetSumInstance derived = make();
    auto flip = subset_solve(derived);
    if (!flip) return std::nullopt;
    std::vector<int8_t> signs(count, 1);
    for (uint32_t i : *flip) signs[i] = -1;
    return signs;
}

}  // namespace

std::optional<std::vector<int8_t>> cusp_sign_solve(const CuspReduction& red) {
    const Field* f = red.field;
    uint64_t p = f->p();
    return sign_solve_common(red.v.size(), [&] {
        SubsetSumInstance derived;
        derived.kind = SubsetSumInstance::Kind::ModVec;
        derived.modulus = p;
        derived.dim = f->n();
        FieldElement sum = f->zero();
        for (const auto& v : red.v) sum += v;
        FieldElement tgt = red.wprime - sum;
        FieldElement minus2 = f->from_int(-2);
        for (const auto& v : red.v) {
            auto cs = (v * minus2).coords();
            derived.vec_elements.emplace_back(cs.begin(), cs.end());
        }
        auto tc = tgt.coords();
        derived.vec_target.assign(tc.begin(), tc.end());
        return derived;
    });
}

std::optional<std::vector<int8_t>> ec_sign_solve(const EcReduction& red) {
    return sign_solve_common(red.v.size(), [&] {
        SubsetSumInstance derived;
        derived.kind = SubsetSumInstance::Kind::Integers;
        int64_t sum = 0;
        for (int64_t v : red.v) sum += v;
        for (int64_t v : red.v) derived.int_elements.push_back(-2 * v);
        derived.int_target = red.wprime - sum;
        return derived;
    });
}

bool cusp_instance_vanishes(const CuspReduction& red) {
    return cusp_sign_solve(red).has_value();
}

// ---------------------------------------------------------------------------
// Pipelines and pull-back

std::vector<uint32_t> pull_back_signs_to_subset(const std::vector<int8_t>& signs,
                                                const SubsetSumInstance& upstream,
                                                const std::vector<uint32_t>& zero_elements) {
    for (int8_t s : signs)
        if (s != 1 && s != -1)
            throw std::invalid_argument("sign witness entries must be +-1");
    // rebuild the stripped index list
    std::vector<uint32_t> kept;
    for (uint32_t i = 0; i < upstream.size(); ++i) {
        if (std::find(zero_elements.begin(), zero_elements.end(), i) ==
            zero_elements.end())
            kept.push_back(i);
    }
    if (kept.size() != signs.size())
        throw std::invalid_argument("sign witness arity mismatch");
    std::vector<uint32_t> subset;
    for (size_t i = 0; i < signs.size(); ++i)
        if (signs[i] == 1) subset.push_back(kept[i]);  // epsilon = (n+1)/2
    if (!subset_check(upstream, subset))
        throw std::invalid_argument("sign witness does not solve the subset instance");
    return subset;
}

namespace {

std::vector<bool> subset_to_assignment(const std::vector<uint32_t>& subset,
                                       uint32_t num_vars, const SatInstance& sat) {
    std::vector<int> taken(num_vars, -1);
    for (uint32_t idx : subset) {
        if (idx >= 2 * num_vars) continue;  // slack element
        uint32_t var = idx / 2;
        bool positive = (idx % 2) == 0;
        if (taken[var] != -1)
            throw std::invalid_argument("witness selects both literals of a variable");
        taken[var] = positive ? 1 : 0;
    }
    std::vector<bool> assignment(num_vars);
    for (uint32_t v = 0; v < num_vars; ++v) {
        if (taken[v] == -1)
            throw std::invalid_argument("witness selects no literal for a variable");
        assignment[v] = taken[v] == 1;
    }
    if (!sat_check(sat, assignment))
        throw std::invalid_argument("pulled-back assignment fails a clause");
    return assignment;
}

}  // namespace

std::vector<bool> pull_back_subset_to_assignment(const std::vector<uint32_t>& subset,
                                                 const ModReduction& red,
                                                 const SatInstance& sat) {
    if (!subset_check(red.instance, subset))
        throw std::invalid_argument("subset witness does not hit the target");
    return subset_to_assignment(subset, red.s, sat);
}

std::vector<bool> pull_back_subset_to_assignment_int(const std::vector<uint32_t>& subset,
                                                     const IntReduction& red,
                                                     const SatInstance& sat) {
    if (!subset_check(red.instance, subset))
        throw std::invalid_argument("subset witness does not hit the target");
    return subset_to_assignment(subset, red.s, sat);
}

CuspPipeline run_cusp_pipeline(const SatInstance& sat, uint64_t p) {
    CuspPipeline out;
    out.sat = sat;
    out.stage1 = sat_to_subsetsum_modm(sat, p);
    out.stage2 = subsetsum_to_sumpoly_cusp(out.stage1.instance);
    auto signs = cusp_sign_solve(out.stage2);
    out.satisfiable = signs.has_value();
    if (out.satisfiable) {
        out.signs = *signs;
        out.subset = pull_back_signs_to_subset(out.signs, out.stage1.instance,
                                               out.stage2.zero_elements);
        out.assignment = pull_back_subset_to_assignment(out.subset, out.stage1, sat);
    }
    return out;
}

EcPipeline run_ec_pipeline(const SatInstance& sat, uint64_t seed) {
    EcPipeline out;
    out.sat = sat;
    out.stage1 = sat_to_subsetsum_int(sat);
    out.stage2 = subsetsum_to_sumpoly_ec(out.stage1.instance, seed);
    if (out.stage2.instance.arity() > kMaxSummationEvalArity)
        throw CapExceeded("summation instance arity beyond the evaluation cap");
    bool vanishes = out.stage2.instance.evaluate().is_zero();
    auto signs = ec_sign_solve(out.stage2);
    if (signs.has_value() != vanishes)
        throw std::logic_error("summation value disagrees with the sign search");
    out.satisfiable = vanishes;
    if (out.satisfiable) {
        out.signs = *signs;
        out.subset = pull_back_signs_to_subset(out.signs, out.stage1.instance,
                                               out.stage2.zero_elements);
        out.assignment = pull_back_subset_to_assignment_int(out.subset, out.stage1, sat);
    }
    return out;
}

}  // namespace semaev
