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

#include "semaev/descent.hpp"

#include <stdexcept>

#include "semaev/sumpoly.hpp"

namespace semaev {

MultiPoly reduce_r1(const MultiPoly& f) {
    uint64_t q = f.field()->order();
    if (q > (1ULL << 20)) throw std::invalid_argument("reduce_r1: field too large");
    return f.reduce_mod_field_equations(q);
}

MultiPoly ring_trace(const MultiPoly& f) {
    const Field* F = f.field();
    MultiPoly t = reduce_r1(f);
    MultiPoly acc = t;
    for (uint32_t i = 1; i < F->n(); ++i) {
        t = reduce_r1(t.frobenius_lift());
        acc += t;
    }
    return acc;
}

DescentResult descend_general(const MultiPoly& f,
                              const std::vector<std::vector<FieldElement>>& subs,
                              const Basis& alpha) {
    const Field* F = f.field();
    if (alpha.field() != F) throw std::invalid_argument("descend: basis field mismatch");
    if (subs.size() != f.nvars()) throw std::invalid_argument("descend: one basis per variable");
    uint64_t p = F->p();
    uint32_t n = F->n();

    MultiPoly fr = reduce_r1(f);

    std::vector<std::string> dvars;
    std::vector<uint32_t> block_start(subs.size());
    for (size_t i = 0; i < subs.size(); ++i) {
        block_start[i] = static_cast<uint32_t>(dvars.size());
        for (size_t j = 0; j < subs[i].size(); ++j) {
            if (subs[i][j].field() != F)
                throw std::invalid_argument("descend: substitution element field mismatch");
            dvars.push_back(f.vars()[i] + "_" + std::to_string(j + 1));
        }
    }

    // Linear forms and their reduced power tables.
    std::vector<std::vector<MultiPoly>> pow(subs.size());
    for (size_t i = 0; i < subs.size(); ++i) {
        MultiPoly line(F, dvars);
        for (size_t j = 0; j < subs[i].size(); ++j) {
            Exponents e(dvars.size(), 0);
            e[block_start[i] + j] = 1;
            line.add_term(e, subs[i][j]);
        }
        uint32_t dmax = fr.degree_in(static_cast<uint32_t>(i));
        pow[i].push_back(MultiPoly::constant(F, dvars, F->one()));
        for (uint32_t e = 1; e <= dmax; ++e)
            pow[i].push_back((pow[i].back() * line).reduce_mod_field_equations(p));
    }

    MultiPoly r3(F, dvars);
    for (const auto& [e, c] : fr.terms()) {
        MultiPoly term = MultiPoly::constant(F, dvars, c);
        for (size_t i = 0; i < subs.size(); ++i)
            if (e[i]) term = (term * pow[i][e[i]]).reduce_mod_field_equations(p);
        r3 += term;
    }

    const Field* fp = Field::get(p, 1);
    std::vector<MultiPoly> comps(n, MultiPoly(fp, dvars));
    for (const auto& [e, c] : r3.terms()) {
        auto coords = alpha.coords_in(c);
        for (uint32_t i = 0; i < n; ++i)
            if (coords[i]) comps[i].add_term(e, fp->from_uint(coords[i]));
    }
    return DescentResult{std::move(dvars), std::move(comps), std::move(r3)};
}

DescentResult descend(const MultiPoly& f, const Basis& alpha) {
    std::vector<std::vector<FieldElement>> subs(f.nvars(), alpha.alphas());
    return descend_general(f, subs, alpha);
}

MultiPoly recombine(const DescentResult& d, const Basis& alpha) {
    const Field* F = alpha.field();
    MultiPoly acc(F, d.r3.vars());
    for (uint32_t i = 0; i < alpha.size(); ++i) {
        for (const auto& [e, c] : d.components[i].terms()) {
            acc.add_term(e, F->from_int(static_cast<int64_t>(c.coord(0))) * alpha.alpha(i));
        }
    }
    return acc;
}

TraceSplitReport trace_split_check(const MultiPoly& f, const FieldElement& c,
                                 const Basis& alpha) {
    const Field* F = f.field();
    uint64_t p = F->p();
    TraceSplitReport rep;

    MultiPoly cf = f.scaled(c);
    auto lhs = descend(ring_trace(cf), alpha);
    auto comps = descend(reduce_r1(f), alpha);

    auto one_c = alpha.one_coords();                 // 1 = sum c_i alpha_i
    std::vector<uint64_t> w(alpha.size());
    for (uint32_t j = 0; j < alpha.size(); ++j)
        w[j] = F->trace(c * alpha.alpha(j));         // Tr(c alpha_j)

    const Field* fp = Field::get(p, 1);
    MultiPoly combo(fp, comps.vars);
    for (uint32_t j = 0; j < alpha.size(); ++j)
        if (w[j]) combo += comps.components[j].scaled(fp->from_uint(w[j]));

    rep.identity_holds = true;
    for (uint32_t i = 0; i < alpha.size(); ++i) {
        MultiPoly rhs = combo.scaled(fp->from_uint(one_c[i]));
        if (lhs.components[i] != rhs) rep.identity_holds = false;
    }

    // With some c_j != 0, every component is a scalar multiple of that one.
    rep.ideal_statement_holds = true;
    uint32_t pivot = alpha.size();
    for (uint32_t j = 0; j < alpha.size(); ++j)
        if (one_c[j] != 0) { pivot = j; break; }
    if (pivot < alpha.size()) {
        FieldElement pinv = fp->from_uint(one_c[pivot]).inv();
        for (uint32_t i = 0; i < alpha.size(); ++i) {
            MultiPoly expect =
                lhs.components[pivot].scaled(pinv * fp->from_uint(one_c[i]));
            if (lhs.components[i] != expect) rep.ideal_statement_holds = false;
        }
    }
    return rep;
}

namespace {

// T = S_3(X1, X2, x(P)) as a bivariate polynomial.
MultiPoly specialized_s3(const WeierstrassModel& m, const FieldElement& xp) {
    MultiPoly s3 = summation_poly(m, 3);
    MultiPoly t3 = s3.substitute_const(2, xp);
    if (t3.degree_in(2) != 0) throw std::logic_error("substitution left X2");
    return t3.relabel({"X1", "X2"}, {0, 1, 0});
}

void require_ordinary_non2torsion(const WeierstrassModel& m, const CurvePoint& p) {
    if (!m.ordinary_char2())
        throw std::invalid_argument("needs an ordinary curve over GF(2^n)");
    if (p.is_infinity()) throw std::invalid_argument("P must be affine");
    if (scalar_mul(m, 2, p).is_infinity())
        throw std::invalid_argument("P must not be 2-torsion");
}

}  // namespace

TraceQuotientReport trace_quotient_check(const WeierstrassModel& m, const CurvePoint& p,
                                  TraceCheckMode mode) {
    require_ordinary_non2torsion(m, p);
    const Field* F = m.field;
    TraceQuotientReport rep;

    FieldElement x = p.x();
    FieldElement b = m.a1 * (m.a1 * x + m.a3);
    FieldElement binv2 = (b * b).inv();
    FieldElement a1inv2 = (m.a1 * m.a1).inv();

    MultiPoly t = specialized_s3(m, x);
    std::vector<std::string> vars = {"X1", "X2"};
    MultiPoly h(F, vars);
    h.add_term({1, 0}, F->one());
    h.add_term({0, 1}, F->one());
    h.add_term({0, 0}, x + m.a2);

    bool do_exhaustive = mode == TraceCheckMode::Exhaustive ||
                         (mode == TraceCheckMode::Auto && F->n() <= 6);
    bool do_symbolic = mode == TraceCheckMode::Symbolic ||
                       (mode == TraceCheckMode::Auto && F->n() > 6);
    if (mode == TraceCheckMode::Exhaustive && F->n() > 6)
        throw std::invalid_argument("exhaustive mode capped at n <= 6");
    if (do_symbolic && F->n() > 12)
        throw std::invalid_argument("symbolic mode capped at n <= 12");

    rep.identity_holds = true;
    if (do_symbolic) {
        rep.symbolic_ran = true;
        MultiPoly lhs = ring_trace(t.scaled(binv2));
        MultiPoly rhs = ring_trace(h.scaled(a1inv2));
        rep.identity_holds = lhs == rhs;
    }
    if (do_exhaustive) {
        rep.exhaustive_ran = true;
        rep.trace_zero_on_variety = true;
        for (uint64_t i = 0; i < F->order() && rep.identity_holds; ++i) {
            for (uint64_t j = 0; j < F->order(); ++j) {
                FieldElement v1 = F->from_uint(i), v2 = F->from_uint(j);
                FieldElement tv = t.evaluate({v1, v2});
                FieldElement hv = h.evaluate({v1, v2});
                if (F->trace(tv * binv2) != F->trace(hv * a1inv2)) {
                    rep.identity_holds = false;
                    break;
                }
                if (tv.is_zero() && F->trace(hv * a1inv2) != 0)
                    rep.trace_zero_on_variety = false;
            }
        }
    }

    rep.scalar_identity =
        F->trace((m.b6 * x + m.b8) * binv2) == F->trace((x + m.a2) * a1inv2);

    CurvePoint dbl = scalar_mul(m, 2, p);
    rep.zero_at_doubling = t.evaluate({dbl.x(), x}).is_zero();
    return rep;
}

DescentCombinationReport descent_combination_check(const WeierstrassModel& m, const CurvePoint& p,
                                      const Basis& alpha) {
    require_ordinary_non2torsion(m, p);
    const Field* F = m.field;
    uint32_t n = F->n();
    DescentCombinationReport rep;

    FieldElement x = p.x();
    FieldElement b = m.a1 * (m.a1 * x + m.a3);
    FieldElement binv2 = (b * b).inv();
    FieldElement a1inv2 = (m.a1 * m.a1).inv();

    MultiPoly t = specialized_s3(m, x);
    auto dt = descend(t, alpha);
    const Field* f2 = Field::get(2, 1);

    rep.weights.resize(n);
    MultiPoly lhs(f2, dt.vars);
    for (uint32_t j = 0; j < n; ++j) {
        rep.weights[j] = F->trace(alpha.alpha(j) * binv2);
        if (rep.weights[j]) lhs += dt.components[j];
    }

    rep.constant = F->trace((x + m.a2) * a1inv2);
    MultiPoly rhs(f2, dt.vars);
    if (rep.constant) rhs.add_term(Exponents(dt.vars.size(), 0), f2->one());
    for (uint32_t j = 0; j < n; ++j) {
        if (F->trace(alpha.alpha(j) * a1inv2) == 0) continue;
        Exponents e1(dt.vars.size(), 0), e2(dt.vars.size(), 0);
        e1[j] = 1;       // X1_j
        e2[n + j] = 1;   // X2_j
        rhs.add_term(e1, f2->one());
        rhs.add_term(e2, f2->one());
    }

    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.equal = lhs == rhs;
    rep.lhs_degree = lhs.total_degree();
    return rep;
}

}  // namespace semaev
