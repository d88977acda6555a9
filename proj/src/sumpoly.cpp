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

#include "semaev/sumpoly.hpp"

#include <optional>
#include <stdexcept>

#include "semaev/upoly.hpp"

namespace semaev {

namespace {

std::vector<std::string> var_names(uint32_t r) {
    std::vector<std::string> v;
    v.reserve(r);
    for (uint32_t i = 0; i < r; ++i) v.push_back("X" + std::to_string(i));
    return v;
}

MultiPoly summation3_in(const WeierstrassModel& m,
                        const std::vector<std::string>& vars, uint32_t i0,
                        uint32_t i1, uint32_t i2) {
    const Field* f = m.field;
    MultiPoly s(f, vars);
    auto e = [&](uint32_t d0, uint32_t d1, uint32_t d2) {
        Exponents x(vars.size(), 0);
        x[i0] = d0;
        x[i1] = d1;
        x[i2] = d2;
        return x;
    };
    FieldElement one = f->one(), two = f->from_int(2);
    s.add_term(e(2, 2, 0), one);
    s.add_term(e(2, 0, 2), one);
    s.add_term(e(0, 2, 2), one);
    s.add_term(e(2, 1, 1), -two);
    s.add_term(e(1, 2, 1), -two);
    s.add_term(e(1, 1, 2), -two);
    s.add_term(e(1, 1, 1), -m.b2);
    s.add_term(e(1, 1, 0), -m.b4);
    s.add_term(e(1, 0, 1), -m.b4);
    s.add_term(e(0, 1, 1), -m.b4);
    s.add_term(e(1, 0, 0), -m.b6);
    s.add_term(e(0, 1, 0), -m.b6);
    s.add_term(e(0, 0, 1), -m.b6);
    s.add_term(e(0, 0, 0), -m.b8);
    return s;
}

// Tower of quadratic extensions tall enough to hold interpolation nodes.
struct FieldLift {
    const Field* base = nullptr;
    const Field* top = nullptr;
    std::vector<const QuadraticExtension*> chain;

    FieldElement up(FieldElement x) const {
        for (const auto* e : chain) x = e->embed(x);
        return x;
    }
    FieldElement down(const FieldElement& x) const {
        FieldElement v = x;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            auto p = (*it)->project(v);
            if (!p) throw std::logic_error("coefficient outside the base field");
            v = *p;
        }
        return v;
    }
};

FieldLift make_lift(const Field* base, uint64_t min_order) {
    FieldLift lift;
    lift.base = lift.top = base;
    while (lift.top->order() < min_order) {
        const QuadraticExtension& e = quadratic_extension_of(lift.top);
        lift.chain.push_back(&e);
        lift.top = e.top();
    }
    return lift;
}

// Exact resultant by declared-degree Sylvester determinants on a tensor grid
// followed by axis-by-axis interpolation. Used for the larger summation
// polynomials, where fraction-free elimination drowns in intermediate swell;
// the result is identical. Returns nullopt when the grid exceeds `grid_cap`.
std::optional<MultiPoly> resultant_interpolated(const MultiPoly& f,
                                                const MultiPoly& g, uint32_t var,
                                                uint64_t grid_cap) {
    const Field* base = f.field();
    uint32_t m = f.nvars();
    uint32_t da = f.degree_in(var), db = g.degree_in(var);
    if (da == 0 || db == 0)
        throw std::invalid_argument("resultant: degree 0 in the chosen variable");

    std::vector<uint64_t> n(m, 1);
    uint64_t grid = 1, maxn = 1;
    for (uint32_t v = 0; v < m; ++v) {
        if (v == var) continue;
        uint64_t bound = static_cast<uint64_t>(db) * f.degree_in(v) +
                         static_cast<uint64_t>(da) * g.degree_in(v);
        n[v] = bound + 1;
        maxn = std::max(maxn, n[v]);
        if (grid > grid_cap / n[v]) return std::nullopt;
        grid *= n[v];
    }
    if (maxn > (1ULL << 20)) return std::nullopt;

    FieldLift lift = make_lift(base, maxn);
    const Field* F = lift.top;

    MultiPoly fl(F, f.vars()), gl(F, g.vars());
    for (const auto& [e, c] : f.terms()) fl.add_term(e, lift.up(c));
    for (const auto& [e, c] : g.terms()) gl.add_term(e, lift.up(c));

    std::vector<uint64_t> stride(m, 0);
    {
        uint64_t s = 1;
        for (uint32_t v = 0; v < m; ++v) {
            stride[v] = (v == var) ? 0 : s;
            if (v != var) s *= n[v];
        }
    }

    std::vector<uint64_t> values(grid, 0);
    // Depth-first specialization over the axes, leaves give numeric resultants.
    auto extract_coeffs = [&](const MultiPoly& p, uint32_t d) {
        std::vector<FieldElement> c(d + 1, F->zero());
        for (const auto& [e, coef] : p.terms()) c[e[var]] = coef;
        return c;
    };
    auto rec = [&](auto&& self, const MultiPoly& fc, const MultiPoly& gc,
                   uint32_t axis, uint64_t offset) -> void {
        while (axis < m && axis == var) ++axis;
        if (axis >= m) {
            FieldElement v = resultant_declared(F, extract_coeffs(fc, da), da,
                                                extract_coeffs(gc, db), db);
            values[offset] = v.to_uint();
            return;
        }
        for (uint64_t t = 0; t < n[axis]; ++t) {
            FieldElement node = F->from_uint(t);
            self(self, fc.substitute_const(axis, node), gc.substitute_const(axis, node),
                 axis + 1 == var ? axis + 2 : axis + 1, offset + t * stride[axis]);
        }
    };
    rec(rec, fl, gl, 0, 0);

    // Interpolate along each axis in place (values -> coefficients).
    for (uint32_t v = 0; v < m; ++v) {
        if (n[v] <= 1) continue;
        uint32_t nv = static_cast<uint32_t>(n[v]);
        std::vector<FieldElement> xs;
        for (uint32_t t = 0; t < nv; ++t) xs.push_back(F->from_uint(t));
        // Inverse Vandermonde, columns solved one unit vector at a time.
        std::vector<std::vector<FieldElement>> vinv(nv,
                                                    std::vector<FieldElement>(nv, F->zero()));
        for (uint32_t j = 0; j < nv; ++j) {
            std::vector<FieldElement> ys(nv, F->zero());
            ys[j] = F->one();
            UPoly col = interpolate(F, xs, ys);
            for (uint32_t i = 0; i < nv; ++i) vinv[i][j] = col.coeff(i);
        }
        uint64_t lines = grid / nv;
        std::vector<FieldElement> vals(nv, F->zero()), coef(nv, F->zero());
        for (uint64_t line = 0; line < lines; ++line) {
            // index with axis v removed
            uint64_t lo = line % stride[v];
            uint64_t hi = line / stride[v];
            uint64_t start = hi * stride[v] * nv + lo;
            for (uint32_t t = 0; t < nv; ++t)
                vals[t] = F->from_uint(values[start + t * stride[v]]);
            for (uint32_t i = 0; i < nv; ++i) {
                FieldElement acc = F->zero();
                for (uint32_t t = 0; t < nv; ++t) {
                    if (vals[t].is_zero()) continue;
                    acc += vinv[i][t] * vals[t];
                }
                coef[i] = acc;
            }
            for (uint32_t t = 0; t < nv; ++t)
                values[start + t * stride[v]] = coef[t].to_uint();
        }
    }

    MultiPoly out(base, f.vars());
    std::vector<uint32_t> idx(m, 0);
    for (uint64_t off = 0; off < grid; ++off) {
        if (values[off] != 0) {
            Exponents e(m, 0);
            uint64_t rest = off;
            for (uint32_t v = 0; v < m; ++v) {
                if (v == var) continue;
                e[v] = static_cast<uint32_t>(rest % n[v]);
                rest /= n[v];
            }
            out.add_term(e, lift.down(F->from_uint(values[off])));
        }
    }
    return out;
}

}  // namespace

MultiPoly summation_poly(const WeierstrassModel& m, uint32_t r) {
    if (r < 2 || r > kMaxSummationArity)
        throw std::invalid_argument("summation_poly: arity out of range (2..7)");
    const Field* f = m.field;
    if (r == 2) {
        MultiPoly s(f, var_names(2));
        s.add_term({1, 0}, f->one());
        s.add_term({0, 1}, -f->one());
        return s;
    }
    if (r == 3) return summation3_in(m, var_names(3), 0, 1, 2);

    // Variables X0..X{r-1} plus the elimination variable at index r.
    std::vector<std::string> ext = var_names(r);
    ext.push_back("T");
    MultiPoly prev = summation_poly(m, r - 1);
    // relabel X0..X{r-3} identically, last variable X{r-2} -> T
    std::vector<uint32_t> where(r - 1);
    for (uint32_t i = 0; i + 1 < r - 1; ++i) where[i] = i;
    where[r - 2] = r;
    MultiPoly lhs = prev.relabel(ext, where);
    MultiPoly rhs = summation3_in(m, ext, r - 2, r - 1, r);
    MultiPoly res(f, ext);
    if (r >= 5) {
        // Fraction-free elimination swells badly at these sizes; the grid
        // evaluation of the same determinant is exact and much faster.
        auto viaGrid = resultant_interpolated(lhs, rhs, r, 1ULL << 25);
        res = viaGrid ? *viaGrid : resultant(lhs, rhs, r);
    } else {
        res = resultant(lhs, rhs, r);
    }
    // drop the elimination variable
    std::vector<uint32_t> back(r + 1);
    for (uint32_t i = 0; i < r; ++i) back[i] = i;
    back[r] = 0;  // T never occurs in the resultant
    if (res.degree_in(r) != 0) throw std::logic_error("resultant kept T");
    return res.relabel(var_names(r), back);
}

namespace {

// Coefficients of S_3(u, Z, Y) as polynomials in Z, ascending in Y.
std::array<UPoly, 3> s3_coeffs_in_y(const WeierstrassModel& m, const FieldElement& u) {
    const Field* f = m.field;
    FieldElement two = f->from_int(2);
    FieldElement u2 = u * u;
    // Y^2: (u - Z)^2 = u^2 - 2uZ + Z^2
    UPoly c2 = UPoly::make(f, {u2, -two * u, f->one()});
    // Y^1: -2u^2 Z - 2u Z^2 - b2 u Z - b4 u - b4 Z - b6
    UPoly c1 = UPoly::make(
        f, {-m.b4 * u - m.b6, -(two * u2) - m.b2 * u - m.b4, -(two * u)});
    // Y^0: u^2 Z^2 - b4 u Z - b6 u - b6 Z - b8
    UPoly c0 = UPoly::make(f, {-m.b6 * u - m.b8, -m.b4 * u - m.b6, u2});
    return {c0, c1, c2};
}

std::array<FieldElement, 3> s3_coeffs_at(const WeierstrassModel& m,
                                         const FieldElement& u,
                                         const FieldElement& z) {
    auto cs = s3_coeffs_in_y(m, u);
    return {cs[0].eval(z), cs[1].eval(z), cs[2].eval(z)};
}

// Declared-degree Sylvester determinant over F[Z] by fraction-free
// elimination; used when the field is too small for interpolation.
std::vector<FieldElement> sylvester_det_upoly(const Field* f,
                                              const std::vector<UPoly>& a, uint32_t da,
                                              const std::vector<UPoly>& b, uint32_t db) {
    uint32_t dim = da + db;
    auto atv = [&](const std::vector<UPoly>& v, uint32_t i) {
        return i < v.size() ? v[i] : UPoly::zero(f);
    };
    std::vector<UPoly> mat(static_cast<size_t>(dim) * dim, UPoly::zero(f));
    auto at = [&](uint32_t i, uint32_t j) -> UPoly& { return mat[i * dim + j]; };
    for (uint32_t i = 0; i < db; ++i)
        for (uint32_t j = 0; j <= da; ++j) at(i, i + j) = atv(a, da - j);
    for (uint32_t i = 0; i < da; ++i)
        for (uint32_t j = 0; j <= db; ++j) at(db + i, i + j) = atv(b, db - j);

    bool neg = false;
    UPoly prev = UPoly::constant(f->one());
    for (uint32_t k = 0; k + 1 < dim; ++k) {
        if (at(k, k).is_zero()) {
            uint32_t r = dim;
            for (uint32_t i = k + 1; i < dim; ++i)
                if (!at(i, k).is_zero()) { r = i; break; }
            if (r == dim) return {};  // zero determinant
            for (uint32_t j = 0; j < dim; ++j) std::swap(at(k, j), at(r, j));
            neg = !neg;
        }
        for (uint32_t i = k + 1; i < dim; ++i) {
            for (uint32_t j = k + 1; j < dim; ++j) {
                UPoly numer = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                if (numer.is_zero()) {
                    at(i, j) = numer;
                    continue;
                }
                UPoly q, rr;
                divmod(numer, prev, &q, &rr);
                if (!rr.is_zero()) throw std::logic_error("bareiss division not exact");
                at(i, j) = q;
            }
            at(i, k) = UPoly::zero(f);
        }
        prev = at(k, k);
    }
    UPoly det = at(dim - 1, dim - 1);
    if (neg) det = mul_scalar(det, -f->one());
    return det.c;
}

}  // namespace

FieldElement eval_summation(const WeierstrassModel& m,
                            const std::vector<FieldElement>& xs) {
    const Field* f = m.field;
    uint32_t r = static_cast<uint32_t>(xs.size());
    if (r < 2 || r > kMaxSummationEvalArity)
        throw std::invalid_argument("eval_summation: arity out of range (2..12)");
    for (const auto& x : xs)
        if (x.field() != f) throw std::invalid_argument("eval_summation: field mismatch");
    if (r == 2) return xs[0] - xs[1];
    if (r == 3) {
        auto c = s3_coeffs_at(m, xs[0], xs[1]);
        return (c[2] * xs[2] + c[1]) * xs[2] + c[0];
    }

    // V_k(Y) = S_k(x_0..x_{k-2}, Y), declared degree 2^{k-2}, built up by
    // eliminating Y level by level.
    auto v3 = s3_coeffs_in_y(m, xs[0]);
    std::vector<FieldElement> v(3);
    for (int i = 0; i < 3; ++i) v[i] = v3[i].eval(xs[1]);
    uint32_t declared = 2;

    for (uint32_t k = 4; k < r; ++k) {
        uint32_t out_decl = declared * 2;
        std::vector<FieldElement> next;
        if (f->order() > out_decl) {
            // interpolation at out_decl+1 nodes
            std::vector<FieldElement> nodes, vals;
            for (uint64_t t = 0; t <= out_decl; ++t) {
                FieldElement z = f->from_uint(t);
                auto sc = s3_coeffs_at(m, xs[k - 2], z);
                FieldElement rv = resultant_declared(
                    f, v, declared, {sc[0], sc[1], sc[2]}, 2);
                nodes.push_back(z);
                vals.push_back(rv);
            }
            next = interpolate(f, nodes, vals).c;
        } else {
            std::vector<UPoly> vv;
            vv.reserve(v.size());
            for (const auto& c : v) vv.push_back(UPoly::constant(c));
            auto sc = s3_coeffs_in_y(m, xs[k - 2]);
            next = sylvester_det_upoly(f, vv, declared, {sc[0], sc[1], sc[2]}, 2);
        }
        v = std::move(next);
        declared = out_decl;
    }
    auto sc = s3_coeffs_at(m, xs[r - 2], xs[r - 1]);
    return resultant_declared(f, v, declared, {sc[0], sc[1], sc[2]}, 2);
}

VanishingReport verify_vanishing_by_points(const WeierstrassModel& m,
                                           const std::vector<FieldElement>& xs) {
    if (m.kind != WeierstrassModel::Kind::Smooth)
        throw std::invalid_argument("verify_vanishing_by_points needs a smooth model");
    VanishingReport rep;
    rep.vanishes = eval_summation(m, xs).is_zero();

    QuadraticExtension ext(m.field);
    WeierstrassModel mt = embed_model(m, ext);
    rep.witness_field = ext.top();

    std::vector<std::vector<CurvePoint>> candidates;
    for (const auto& x : xs) {
        auto ys = y_roots(mt, ext.embed(x));
        if (ys.empty())
            throw std::invalid_argument(
                "no y-root in the quadratic extension; input is not a curve x-coordinate");
        std::vector<CurvePoint> c;
        for (const auto& y : ys) c.emplace_back(ext.embed(x), y);
        candidates.push_back(std::move(c));
    }
    // Depth-first walk over branch choices.
    std::vector<CurvePoint> chosen(xs.size());
    std::vector<CurvePoint> partial(xs.size() + 1);
    partial[0] = CurvePoint::infinity();
    auto dfs = [&](auto&& self, size_t i) -> bool {
        if (i == xs.size()) return partial[i].is_infinity();
        for (const auto& p : candidates[i]) {
            chosen[i] = p;
            partial[i + 1] = point_add(mt, partial[i], p);
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    if (dfs(dfs, 0)) {
        rep.witness_found = true;
        rep.points = chosen;
    }
    return rep;
}

namespace {

DegenerateCheck degenerate_check_common(const WeierstrassModel& model,
                                        const std::vector<FieldElement>& transformed,
                                        const FieldElement& unit,
                                        const FieldElement& product) {
    DegenerateCheck out;
    out.lhs = eval_summation(model, transformed);
    out.rhs = unit * product;
    out.equal = out.lhs == out.rhs;
    out.vanishes = out.lhs.is_zero();
    out.relation_exists = product.is_zero();
    return out;
}

}  // namespace

DegenerateCheck nodal_factorization_check(const Field* f, const FieldElement& x0,
                                          const FieldElement& x1,
                                          const FieldElement& x2) {
    for (const auto& x : {x0, x1, x2})
        if (x.is_zero() || x.is_one())
            throw std::invalid_argument("nodal check: inputs must avoid 0 and 1");
    FieldElement one = f->one();
    auto transform = [&](const FieldElement& x) {
        FieldElement d = x - one;
        return x / (d * d);
    };
    FieldElement denom = (x0 - one) * (x1 - one) * (x2 - one);
    FieldElement unit = denom.pow(4).inv();
    FieldElement product = (x1 * x2 - x0) * (x0 * x2 - x1) * (-(x0 * x1) + x2) *
                           (x0 * x1 * x2 - one);
    return degenerate_check_common(nodal_model(f),
                                   {transform(x0), transform(x1), transform(x2)},
                                   unit, product);
}

DegenerateCheck cuspidal_factorization_check(const Field* f, const FieldElement& x0,
                                             const FieldElement& x1,
                                             const FieldElement& x2) {
    for (const auto& x : {x0, x1, x2})
        if (x.is_zero())
            throw std::invalid_argument("cuspidal check: inputs must be nonzero");
    auto transform = [&](const FieldElement& x) { return (x * x).inv(); };
    FieldElement unit = (x0 * x1 * x2).pow(4).inv();
    FieldElement product = (-x0 + x1 - x2) * (-x0 + x1 + x2) * (x0 + x1 - x2) *
                           (x0 + x1 + x2);
    return degenerate_check_common(cuspidal_model(f),
                                   {transform(x0), transform(x1), transform(x2)},
                                   unit, product);
}

}  // namespace semaev
