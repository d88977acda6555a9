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

#include "semaev/gbprofiler.hpp"

#include <algorithm>
#include <unordered_map>

#include "semaev/sumpoly.hpp"

namespace semaev {

namespace {

uint32_t popcount(uint32_t v) { return static_cast<uint32_t>(__builtin_popcount(v)); }

// mask grevlex: fewer variables first; ties broken so that the mask holding
// the highest differing variable is smaller.
bool mask_grevlex_less(uint32_t a, uint32_t b) {
    uint32_t pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    uint32_t hd = 31 - __builtin_clz(a ^ b);
    return (a >> hd) & 1;
}

std::vector<uint32_t> monomials_up_to(uint32_t nvars, uint32_t d) {
    std::vector<uint32_t> out;
    out.push_back(0);
    uint64_t full = nvars >= 32 ? 0xffffffffULL : (1ULL << nvars) - 1;
    for (uint32_t k = 1; k <= std::min(d, nvars); ++k) {
        uint64_t m = (1ULL << k) - 1;  // Gosper's hack over k-subsets
        while (m <= full) {
            out.push_back(static_cast<uint32_t>(m));
            uint64_t c = m & (~m + 1);
            uint64_t r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    std::sort(out.begin(), out.end(),
              [](uint32_t a, uint32_t b) { return !mask_grevlex_less(a, b); });
    return out;
}

}  // namespace

BoolPoly BoolPoly::from_multipoly(const MultiPoly& p) {
    if (p.field()->p() != 2 || p.field()->n() != 1)
        throw std::invalid_argument("bool poly needs GF(2) coefficients");
    if (p.nvars() > 32) throw std::invalid_argument("bool poly capped at 32 variables");
    BoolPoly out;
    for (const auto& [e, c] : p.terms()) {
        uint32_t mask = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 1) throw std::invalid_argument("bool poly needs multilinear input");
            if (e[i]) mask |= 1u << i;
        }
        out.monos.push_back(mask);
    }
    std::sort(out.monos.begin(), out.monos.end());
    return out;
}

uint32_t BoolPoly::degree() const {
    uint32_t d = 0;
    for (uint32_t m : monos) d = std::max(d, popcount(m));
    return d;
}

bool BoolPoly::eval(uint32_t assignment) const {
    uint32_t acc = 0;
    for (uint32_t m : monos)
        if ((m & ~assignment) == 0) acc ^= 1;
    return acc;
}

BoolPoly BoolPoly::times_monomial(uint32_t mask) const {
    std::vector<uint32_t> v;
    v.reserve(monos.size());
    for (uint32_t m : monos) v.push_back(m | mask);
    std::sort(v.begin(), v.end());
    BoolPoly out;
    for (size_t i = 0; i < v.size();) {
        size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) & 1) out.monos.push_back(v[i]);
        i = j;
    }
    return out;
}

void BoolPoly::xor_in(const BoolPoly& o) {
    std::vector<uint32_t> merged;
    merged.reserve(monos.size() + o.monos.size());
    size_t i = 0, j = 0;
    while (i < monos.size() && j < o.monos.size()) {
        if (monos[i] < o.monos[j]) merged.push_back(monos[i++]);
        else if (monos[i] > o.monos[j]) merged.push_back(o.monos[j++]);
        else { ++i; ++j; }
    }
    while (i < monos.size()) merged.push_back(monos[i++]);
    while (j < o.monos.size()) merged.push_back(o.monos[j++]);
    monos = std::move(merged);
}

BooleanSystem to_boolean_system(const std::vector<std::string>& vars,
                                const std::vector<MultiPoly>& gens) {
    BooleanSystem sys;
    sys.vars = vars;
    for (const auto& g : gens) {
        if (g.vars() != vars) throw std::invalid_argument("generator variable mismatch");
        BoolPoly bp = BoolPoly::from_multipoly(g);
        if (!bp.is_zero()) sys.gens.push_back(std::move(bp));
    }
    return sys;
}

uint32_t BooleanSystem::max_degree() const {
    uint32_t d = 0;
    for (const auto& g : gens) d = std::max(d, g.degree());
    return d;
}

namespace {

struct BitMat {
    uint32_t cols = 0, words = 0;
    std::vector<std::vector<uint64_t>> rows;
    std::vector<int> pivot_row_of_col;  // after rref

    void init(uint32_t c) {
        cols = c;
        words = (c + 63) / 64;
        pivot_row_of_col.assign(cols, -1);
    }
    void set(std::vector<uint64_t>& row, uint32_t c) { row[c / 64] |= 1ULL << (c % 64); }
    static bool get(const std::vector<uint64_t>& row, uint32_t c) {
        return (row[c / 64] >> (c % 64)) & 1;
    }
    static void xor_rows(std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
        for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    }
    static int lead(const std::vector<uint64_t>& row) {
        for (size_t w = 0; w < row.size(); ++w)
            if (row[w]) return static_cast<int>(w * 64 + __builtin_ctzll(row[w]));
        return -1;
    }

    // Deterministic full row reduction, leftmost pivots first.
    uint64_t rref() {
        uint64_t rank = 0;
        for (uint32_t c = 0; c < cols && rank < rows.size(); ++c) {
            uint32_t piv = static_cast<uint32_t>(rows.size());
            for (uint32_t r = static_cast<uint32_t>(rank); r < rows.size(); ++r)
                if (get(rows[r], c)) { piv = r; break; }
            if (piv == rows.size()) continue;
            std::swap(rows[rank], rows[piv]);
            for (uint32_t r = 0; r < rows.size(); ++r)
                if (r != rank && get(rows[r], c)) xor_rows(rows[r], rows[rank]);
            pivot_row_of_col[c] = static_cast<int>(rank);
            ++rank;
        }
        return rank;
    }

    // Normal-form reduction of an external row against this RREF.
    void reduce(std::vector<uint64_t>& row) const {
        for (;;) {
            int l = lead(row);
            if (l < 0) return;
            int pr = pivot_row_of_col[static_cast<uint32_t>(l)];
            if (pr < 0) return;
            xor_rows(row, rows[static_cast<uint32_t>(pr)]);
        }
    }
};

struct ColumnSpace {
    std::vector<uint32_t> masks;  // grevlex-descending
    std::unordered_map<uint32_t, uint32_t> index;
    explicit ColumnSpace(uint32_t nvars, uint32_t d) {
        masks = monomials_up_to(nvars, d);
        index.reserve(masks.size());
        for (uint32_t i = 0; i < masks.size(); ++i) index.emplace(masks[i], i);
    }
};

std::vector<uint64_t> to_bitrow(const BoolPoly& p, const ColumnSpace& cs, uint32_t words) {
    std::vector<uint64_t> row(words, 0);
    for (uint32_t m : p.monos) {
        uint32_t c = cs.index.at(m);
        row[c / 64] |= 1ULL << (c % 64);
    }
    return row;
}

BoolPoly from_bitrow(const std::vector<uint64_t>& row, const ColumnSpace& cs) {
    BoolPoly p;
    for (uint32_t c = 0; c < cs.masks.size(); ++c)
        if (BitMat::get(row, c)) p.monos.push_back(cs.masks[c]);
    std::sort(p.monos.begin(), p.monos.end());
    return p;
}

// All products (monomial) * (generator) of degree <= d, in deterministic order.
std::vector<BoolPoly> macaulay_products(const BooleanSystem& sys, uint32_t d) {
    std::vector<BoolPoly> rows;
    for (const auto& g : sys.gens) {
        uint32_t e = g.degree();
        if (e > d) continue;
        auto mults = monomials_up_to(sys.nvars(), d - e);
        for (uint32_t m : mults) {
            BoolPoly prod = g.times_monomial(m);
            if (!prod.is_zero()) rows.push_back(std::move(prod));
        }
    }
    return rows;
}

void fill_matrix(BitMat& mat, const std::vector<BoolPoly>& polys, const ColumnSpace& cs,
                 uint64_t mem_budget_bytes) {
    uint64_t bytes = static_cast<uint64_t>(polys.size()) * mat.words * 8;
    if (bytes > mem_budget_bytes)
        throw CapExceeded("macaulay matrix exceeds the memory budget (" +
                          std::to_string(bytes) + " bytes)");
    mat.rows.reserve(polys.size());
    for (const auto& p : polys) mat.rows.push_back(to_bitrow(p, cs, mat.words));
}

}  // namespace

MacaulayStepResult macaulay_step(const BooleanSystem& sys, uint32_t d,
                                 uint64_t mem_budget_bytes) {
    if (d < sys.max_degree())
        throw std::invalid_argument("macaulay_step: degree below the generator degree");
    ColumnSpace cs(sys.nvars(), d);

    BitMat cur;
    cur.init(static_cast<uint32_t>(cs.masks.size()));
    auto prods = macaulay_products(sys, d);
    fill_matrix(cur, prods, cs, mem_budget_bytes);
    MacaulayStepResult res;
    res.rows = cur.rows.size();
    res.cols = cs.masks.size();
    res.rank = cur.rref();

    BitMat prev;
    prev.init(cur.cols);
    if (d > 0) {
        auto prev_prods = macaulay_products(sys, d - 1);
        fill_matrix(prev, prev_prods, cs, mem_budget_bytes);
        prev.rref();
    }

    BitMat accepted;
    accepted.init(cur.cols);
    for (const auto& row : cur.rows) {
        int l = BitMat::lead(row);
        if (l < 0) continue;
        if (popcount(cs.masks[static_cast<uint32_t>(l)]) <= 1)
            res.linear_rows.push_back(from_bitrow(row, cs));
        if (popcount(cs.masks[static_cast<uint32_t>(l)]) >= d) continue;
        std::vector<uint64_t> r = row;
        prev.reduce(r);
        accepted.reduce(r);
        if (BitMat::lead(r) < 0) continue;
        // keep the accepted set reduced so falls are independent
        accepted.rows.push_back(r);
        accepted.rref();
        res.falls.push_back(from_bitrow(r, cs));
    }
    return res;
}

namespace {

struct LinearSolveResult {
    bool inconsistent = false;
    uint32_t rank = 0;
    uint32_t free_vars = 0;
    bool enumerated = false;
    std::vector<uint32_t> candidates;
};

// Affine rows (variable mask, constant bit), reduced and solved with free
// variables enumerated when feasible.
LinearSolveResult solve_linear(std::vector<std::pair<uint32_t, uint8_t>> rows,
                               uint32_t nvars, uint32_t enum_cap_bits) {
    LinearSolveResult out;
    std::vector<std::pair<uint32_t, uint8_t>> red;
    for (auto row : rows) {
        for (const auto& r : red)
            if (row.first & (1u << __builtin_ctz(r.first)))
                if (r.first) {
                    row.first ^= r.first;
                    row.second ^= r.second;
                }
        if (row.first == 0) {
            if (row.second) { out.inconsistent = true; return out; }
            continue;
        }
        // eliminate the new pivot from existing rows
        uint32_t pv = 1u << __builtin_ctz(row.first);
        for (auto& r : red)
            if (r.first & pv) {
                r.first ^= row.first;
                r.second ^= row.second;
            }
        red.push_back(row);
    }
    out.rank = static_cast<uint32_t>(red.size());
    uint32_t pivots = 0;
    for (const auto& r : red) pivots |= 1u << __builtin_ctz(r.first);
    uint32_t full = nvars == 32 ? ~0u : (1u << nvars) - 1;
    uint32_t frees = full & ~pivots;
    out.free_vars = popcount(frees);
    if (out.free_vars > enum_cap_bits) return out;

    out.enumerated = true;
    std::vector<uint32_t> free_bits;
    for (uint32_t i = 0; i < nvars; ++i)
        if (frees & (1u << i)) free_bits.push_back(i);
    uint64_t count = 1ULL << out.free_vars;
    for (uint64_t pat = 0; pat < count; ++pat) {
        uint32_t a = 0;
        for (uint32_t i = 0; i < free_bits.size(); ++i)
            if ((pat >> i) & 1) a |= 1u << free_bits[i];
        for (const auto& r : red) {
            uint32_t pv = 1u << __builtin_ctz(r.first);
            uint32_t rest = r.first ^ pv;
            uint32_t val = r.second ^ (popcount(rest & a) & 1);
            if (val) a |= pv;
        }
        out.candidates.push_back(a);
    }
    std::sort(out.candidates.begin(), out.candidates.end());
    return out;
}

std::vector<std::pair<uint32_t, uint8_t>> linear_rows_of(const BooleanSystem& sys) {
    std::vector<std::pair<uint32_t, uint8_t>> rows;
    for (const auto& g : sys.gens) {
        if (g.degree() > 1) continue;
        uint32_t mask = 0;
        uint8_t c = 0;
        for (uint32_t m : g.monos) {
            if (m == 0) c ^= 1;
            else mask |= m;
        }
        rows.emplace_back(mask, c);
    }
    return rows;
}

bool satisfies_all(const BooleanSystem& sys, uint32_t a) {
    for (const auto& g : sys.gens)
        if (g.eval(a)) return false;
    return true;
}

}  // namespace

// Rank of the evaluation matrix of `points` against all monomials of degree
// <= d: the codimension of the degree-d slice of their vanishing ideal.
static uint64_t evaluation_rank(const std::vector<uint32_t>& points,
                                const std::vector<uint32_t>& monomials) {
    uint32_t words = static_cast<uint32_t>((monomials.size() + 63) / 64);
    std::vector<std::vector<uint64_t>> rows;
    rows.reserve(points.size());
    for (uint32_t a : points) {
        std::vector<uint64_t> row(words, 0);
        for (uint32_t c = 0; c < monomials.size(); ++c)
            if ((monomials[c] & ~a) == 0) row[c / 64] |= 1ULL << (c % 64);
        rows.push_back(std::move(row));
    }
    std::vector<int> pivot_of_col(monomials.size(), -1);
    std::vector<std::vector<uint64_t>> basis;
    uint64_t rank = 0;
    for (auto& row : rows) {
        for (;;) {
            int l = BitMat::lead(row);
            if (l < 0) break;
            int p = pivot_of_col[static_cast<uint32_t>(l)];
            if (p < 0) {
                pivot_of_col[static_cast<uint32_t>(l)] = static_cast<int>(basis.size());
                basis.push_back(row);
                ++rank;
                break;
            }
            BitMat::xor_rows(row, basis[static_cast<size_t>(p)]);
        }
    }
    return rank;
}

DegreeProfile profile(const BooleanSystem& sys, const ProfileOptions& opt) {
    DegreeProfile prof;
    prof.d_max = opt.d_max;
    BooleanSystem working = sys;
    std::vector<std::pair<uint32_t, uint8_t>> derived_linear;
    uint64_t last_rank = 0, last_cols = 0;

    // Resolved at degree d: the variety is extracted through the affine span
    // (enumeration over the free variables, filtered by the original
    // generators) and the row space is saturated for it, i.e. its rank equals
    // the column count minus the evaluation rank of the solution set. At that
    // point nothing more is derivable at this degree.
    auto try_resolve = [&](uint32_t d) -> bool {
        auto lin = solve_linear(derived_linear, working.nvars(), opt.enum_cap_bits);
        if (lin.inconsistent) {
            prof.resolved = true;
            prof.inconsistent = true;
            prof.solutions_complete = true;
            prof.observed_solving_degree = d;
            return true;
        }
        if (!lin.enumerated) return false;
        std::vector<uint32_t> sols;
        for (uint32_t a : lin.candidates)
            if (satisfies_all(sys, a)) sols.push_back(a);
        if (sols.size() > 4096) return false;
        uint64_t ev_rank =
            evaluation_rank(sols, monomials_up_to(working.nvars(), d));
        if (last_rank + ev_rank != last_cols) return false;
        prof.resolved = true;
        prof.solutions_complete = true;
        prof.inconsistent = sols.empty();
        prof.observed_solving_degree = d;
        prof.solutions = std::move(sols);
        return true;
    };

    if (working.max_degree() <= 1) {
        // Purely linear: solving degree 1 by convention, no fall degree.
        auto lin = solve_linear(linear_rows_of(working), working.nvars(),
                                opt.enum_cap_bits);
        prof.observed_solving_degree = 1;
        prof.resolved = true;
        if (lin.inconsistent) {
            prof.inconsistent = true;
            prof.solutions_complete = true;
        } else if (lin.enumerated) {
            prof.solutions = lin.candidates;  // linear span is the whole system
            prof.solutions_complete = true;
        }
        return prof;
    }

    auto as_affine_rows = [](const std::vector<BoolPoly>& polys) {
        std::vector<std::pair<uint32_t, uint8_t>> rows;
        for (const auto& g : polys) {
            uint32_t mask = 0;
            uint8_t c = 0;
            for (uint32_t m : g.monos) {
                if (m == 0) c ^= 1;
                else mask |= m;
            }
            rows.emplace_back(mask, c);
        }
        return rows;
    };

    uint32_t d0 = std::max(2u, working.max_degree());
    for (uint32_t d = d0; d <= opt.d_max; ++d) {
        for (int iter = 0; iter < 64; ++iter) {
            MacaulayStepResult step;
            try {
                step = macaulay_step(working, d, opt.mem_budget_bytes);
            } catch (const CapExceeded&) {
                prof.capped = true;
                return prof;
            }
            prof.steps.push_back(StepRecord{d, step.rows, step.cols, step.rank,
                                            static_cast<uint32_t>(step.falls.size())});
            prof.max_rows = std::max(prof.max_rows, step.rows);
            prof.max_cols = std::max(prof.max_cols, step.cols);
            derived_linear = as_affine_rows(step.linear_rows);
            last_rank = step.rank;
            last_cols = step.cols;
            if (step.falls.empty()) break;
            if (prof.first_fall_degree == 0) prof.first_fall_degree = d;
            for (auto& f : step.falls) working.gens.push_back(std::move(f));
        }
        if (try_resolve(d)) return prof;
    }
    return prof;  // unresolved at d_max
}

ConstrainedInstance build_constrained_instance(uint32_t n, uint64_t seed) {
    if (n < 4 || n > 24)
        throw std::invalid_argument("constrained instance: n must be in 4..24");
    const Field* f = Field::get(2, n);
    Rng rng(Rng::mix(seed, Rng::mix(0x5e11a, n)));

    ConstrainedInstance inst;
    inst.n = n;
    inst.seed = seed;
    inst.alpha = power_basis(f);

    for (int attempt = 0; attempt < 256; ++attempt) {
        WeierstrassModel m = random_ordinary_model(f, rng);
        CurvePoint p = random_point(m, rng);
        if (scalar_mul(m, 2, p).is_infinity()) continue;

        uint32_t dsub = (n + 1) / 2;
        // independent subspace basis, checked by GF(2) elimination
        std::vector<FieldElement> beta;
        std::vector<uint64_t> span_rows;
        int guard = 0;
        while (beta.size() < dsub && guard++ < 4096) {
            FieldElement cand = f->random_element(rng);
            uint64_t bits = cand.to_uint();
            uint64_t r = bits;
            for (uint64_t row : span_rows) {
                uint64_t lead = row & ~(row - 1);  // lowest set bit
                if (r & lead) r ^= row;
            }
            if (r == 0) continue;
            span_rows.push_back(r);
            beta.push_back(cand);
        }
        if (beta.size() < dsub) continue;

        MultiPoly t = summation_poly(m, 3)
                          .substitute_const(2, p.x())
                          .relabel({"X1", "X2"}, {0, 1, 0});
        auto dres = descend_general(t, {beta, beta}, inst.alpha);
        inst.model = m;
        inst.point = p;
        inst.subspace = beta;
        inst.system = to_boolean_system(dres.vars, dres.components);
        return inst;
    }
    throw std::runtime_error("constrained instance: degenerate draws exhausted");
}

SplitSystem build_split_system(const WeierstrassModel& m,
                               const std::vector<FieldElement>& inputs) {
    if (m.field->p() != 2)
        throw std::invalid_argument("split system: characteristic 2 required");
    uint32_t arity = static_cast<uint32_t>(inputs.size());
    if (arity < 4) throw std::invalid_argument("split system needs at least 4 inputs");

    uint32_t chain = arity - 3;
    std::vector<std::string> vars;
    for (uint32_t i = 1; i <= chain; ++i) vars.push_back("X" + std::to_string(i));

    MultiPoly s3 = summation_poly(m, 3);
    auto spec2 = [&](const FieldElement& u, const FieldElement& v, uint32_t target) {
        MultiPoly t = s3.substitute_const(0, u).substitute_const(1, v);
        std::vector<uint32_t> where = {0, 0, target};
        return t.relabel(vars, where);
    };
    auto spec1 = [&](const FieldElement& u, uint32_t t1, uint32_t t2) {
        MultiPoly t = s3.substitute_const(0, u);
        std::vector<uint32_t> where = {0, t1, t2};
        return t.relabel(vars, where);
    };

    SplitSystem out;
    out.model = m;
    out.inputs = inputs;
    out.links.push_back(spec2(inputs[0], inputs[1], 0));
    for (uint32_t k = 3; k <= arity - 2; ++k)
        out.links.push_back(spec1(inputs[k - 1], k - 3, k - 2));
    out.links.push_back(spec2(inputs[arity - 2], inputs[arity - 1], chain - 1));

    Basis alpha = power_basis(m.field);
    std::vector<std::vector<FieldElement>> subs(vars.size(), alpha.alphas());
    std::vector<MultiPoly> comps;
    std::vector<std::string> dvars;
    for (const auto& link : out.links) {
        auto d = descend_general(link, subs, alpha);
        if (dvars.empty()) dvars = d.vars;
        for (auto& c : d.components) comps.push_back(std::move(c));
    }
    out.system = to_boolean_system(dvars, comps);
    return out;
}

namespace {

MultiPoly lift_poly(const MultiPoly& p, const QuadraticExtension& ext) {
    MultiPoly out(ext.top(), p.vars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, ext.embed(c));
    return out;
}

}  // namespace

bool split_chain_consistent_ext(const SplitSystem& s) {
    const Field* f = s.model.field;
    const QuadraticExtension& ext = quadratic_extension_of(f);
    const Field* top = ext.top();
    std::vector<MultiPoly> links;
    for (const auto& l : s.links) links.push_back(lift_poly(l, ext));
    uint32_t chain = static_cast<uint32_t>(s.inputs.size()) - 3;

    // Links become checkable once their highest variable is assigned: link 0
    // after X1, link k after X_{k+1}.
    std::vector<FieldElement> assign(chain, top->zero());
    auto rec = [&](auto&& self, uint32_t next) -> bool {
        // check all links whose variables are assigned
        for (uint32_t k = 0; k < links.size(); ++k) {
            uint32_t need = (k == links.size() - 1) ? chain : k + 1;
            if (need == next) {
                std::vector<FieldElement> pt;
                for (uint32_t i = 0; i < chain; ++i) pt.push_back(assign[i]);
                if (!links[k].evaluate(pt).is_zero()) return false;
            }
        }
        if (next == chain) {
            // final link(s) requiring the full assignment were checked above
            return true;
        }
        for (uint64_t v = 0; v < top->order(); ++v) {
            assign[next] = top->from_uint(v);
            if (self(self, next + 1)) return true;
        }
        return false;
    };
    // check zero-variable case is impossible here (chain >= 1)
    return rec(rec, 0);
}

bool split_inputs_nondegenerate(const WeierstrassModel& m,
                                const std::vector<FieldElement>& inputs) {
    for (size_t i = 0; i < inputs.size(); ++i)
        for (size_t j = i + 1; j < inputs.size(); ++j)
            if (inputs[i] == inputs[j]) return false;
    for (size_t k = 2; k + 2 < inputs.size(); ++k)
        if ((m.a1 * inputs[k] + m.a3).is_zero()) return false;
    return true;
}

ChainPointScan split_chain_point_scan(const SplitSystem& s) {
    const Field* f = s.model.field;
    const QuadraticExtension& ext = quadratic_extension_of(f);
    WeierstrassModel mt = embed_model(s.model, ext);
    ChainPointScan out;

    std::vector<std::vector<CurvePoint>> cand;
    for (const auto& a : s.inputs) {
        std::vector<CurvePoint> c;
        for (const auto& y : y_roots(mt, ext.embed(a))) c.emplace_back(ext.embed(a), y);
        if (c.empty()) return out;  // not an x-coordinate: no relation
        cand.push_back(std::move(c));
    }
    size_t arity = cand.size();
    auto rec = [&](auto&& self, size_t i, const CurvePoint& sum) -> bool {
        if (i == arity) {
            return sum.is_infinity();
        }
        bool found = false;
        for (const auto& p : cand[i]) {
            CurvePoint next = point_add(mt, sum, p);
            if (i + 1 >= 2 && i + 1 < arity && next.is_infinity())
                out.mid_infinity = true;
            if (self(self, i + 1, next)) found = true;
        }
        return found;
    };
    out.relation = rec(rec, 0, CurvePoint::infinity());
    return out;
}

}  // namespace semaev
