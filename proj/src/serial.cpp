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

#include "semaev/serial.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace semaev {

Json field_to_json(const Field* f) {
    Json j;
    j["p"] = f->p();
    j["n"] = f->n();
    j["modulus"] = f->modulus();
    return j;
}

const Field* field_from_json(const Json& j) {
    return Field::get(j.at("p").get<uint64_t>(), j.at("n").get<uint32_t>(),
                      j.at("modulus").get<std::vector<uint64_t>>());
}

Json element_to_json(const FieldElement& a) { return Json(a.coords()); }

FieldElement element_from_json(const Json& j, const Field* f) {
    return f->from_coords(j.get<std::vector<uint64_t>>());
}

Json model_to_json(const WeierstrassModel& m) {
    Json j;
    j["field"] = field_to_json(m.field);
    j["a"] = Json::array({element_to_json(m.a1), element_to_json(m.a2),
                          element_to_json(m.a3), element_to_json(m.a4),
                          element_to_json(m.a6)});
    return j;
}

WeierstrassModel model_from_json(const Json& j) {
    const Field* f = field_from_json(j.at("field"));
    const Json& a = j.at("a");
    return WeierstrassModel::make(
        f, {element_from_json(a.at(0), f), element_from_json(a.at(1), f),
            element_from_json(a.at(2), f), element_from_json(a.at(3), f),
            element_from_json(a.at(4), f)});
}

Json point_to_json(const CurvePoint& p) {
    if (p.is_infinity()) return Json("inf");
    Json j;
    j["x"] = element_to_json(p.x());
    j["y"] = element_to_json(p.y());
    return j;
}

CurvePoint point_from_json(const Json& j, const WeierstrassModel& m) {
    if (j.is_string() && j.get<std::string>() == "inf") return CurvePoint::infinity();
    return make_point(m, element_from_json(j.at("x"), m.field),
                      element_from_json(j.at("y"), m.field));
}

Json poly_to_json(const MultiPoly& p) {
    Json j;
    j["field"] = field_to_json(p.field());
    j["vars"] = p.vars();
    Json terms = Json::array();
    // grevlex-descending for a canonical file
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json t;
        t["exps"] = it->first;
        t["coeff"] = element_to_json(it->second);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly poly_from_json(const Json& j) {
    const Field* f = field_from_json(j.at("field"));
    MultiPoly p(f, j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
        p.add_term(t.at("exps").get<Exponents>(),
                   element_from_json(t.at("coeff"), f));
    }
    return p;
}

Json descent_to_json(const DescentResult& d, const Basis& alpha) {
    Json j;
    j["schema"] = "semaev/descent/v1";
    j["field"] = field_to_json(alpha.field());
    Json basis = Json::array();
    for (uint32_t i = 0; i < alpha.size(); ++i)
        basis.push_back(element_to_json(alpha.alpha(i)));
    j["basis"] = std::move(basis);
    j["vars"] = d.vars;
    Json comps = Json::array();
    for (const auto& c : d.components) comps.push_back(poly_to_json(c));
    j["components"] = std::move(comps);
    return j;
}

Json subset_instance_to_json(const SubsetSumInstance& inst) {
    Json j;
    if (inst.kind == SubsetSumInstance::Kind::Integers) {
        j["group"] = Json{{"kind", "int"}};
        j["elements"] = inst.int_elements;
        j["target"] = inst.int_target;
    } else {
        j["group"] = Json{{"kind", "mod_vec"}, {"m", inst.modulus}, {"dim", inst.dim}};
        j["elements"] = inst.vec_elements;
        j["target"] = inst.vec_target;
    }
    return j;
}

SubsetSumInstance subset_instance_from_json(const Json& j) {
    SubsetSumInstance inst;
    const Json& g = j.at("group");
    if (g.at("kind") == "int") {
        inst.kind = SubsetSumInstance::Kind::Integers;
        inst.int_elements = j.at("elements").get<std::vector<int64_t>>();
        inst.int_target = j.at("target").get<int64_t>();
    } else {
        inst.kind = SubsetSumInstance::Kind::ModVec;
        inst.modulus = g.at("m").get<uint64_t>();
        inst.dim = g.at("dim").get<uint32_t>();
        inst.vec_elements = j.at("elements").get<std::vector<std::vector<uint32_t>>>();
        inst.vec_target = j.at("target").get<std::vector<uint32_t>>();
    }
    return inst;
}

Json sat_to_json(const SatInstance& sat) {
    Json j;
    j["num_vars"] = sat.num_vars;
    Json cl = Json::array();
    for (const auto& c : sat.clauses) cl.push_back(Json::array({c[0], c[1], c[2]}));
    j["clauses"] = std::move(cl);
    return j;
}

SatInstance sat_from_json(const Json& j) {
    SatInstance sat;
    sat.num_vars = j.at("num_vars").get<uint32_t>();
    for (const auto& c : j.at("clauses"))
        sat.clauses.push_back({c.at(0).get<int32_t>(), c.at(1).get<int32_t>(),
                               c.at(2).get<int32_t>()});
    return sat;
}

Json profile_to_json(const DegreeProfile& prof) {
    Json j;
    j["first_fall_degree"] = prof.first_fall_degree;
    j["observed_solving_degree"] = prof.observed_solving_degree;
    j["resolved"] = prof.resolved;
    j["inconsistent"] = prof.inconsistent;
    j["capped"] = prof.capped;
    j["d_max"] = prof.d_max;
    Json steps = Json::array();
    for (const auto& s : prof.steps) {
        steps.push_back(Json{{"degree", s.degree},
                             {"rows", s.rows},
                             {"cols", s.cols},
                             {"rank", s.rank},
                             {"new_falls", s.new_falls}});
    }
    j["steps"] = std::move(steps);
    j["solutions"] = prof.solutions;
    return j;
}

namespace {

Json signs_to_json(const std::vector<int8_t>& signs) {
    Json out = Json::array();
    for (int8_t s : signs) out.push_back(static_cast<int>(s));
    return out;
}

Json summation_instance_json(const SummationInstance& inst) {
    Json j;
    j["model"] = model_to_json(inst.model);
    Json in = Json::array();
    for (const auto& x : inst.inputs) in.push_back(element_to_json(x));
    j["inputs"] = std::move(in);
    return j;
}

Json witness_json(bool satisfiable, const std::vector<int8_t>& signs,
                  const std::vector<uint32_t>& subset,
                  const std::vector<bool>& assignment) {
    if (!satisfiable) return Json();
    Json w;
    w["schema"] = "semaev/witness/v1";
    w["signs"] = signs_to_json(signs);
    w["subset"] = subset;
    Json a = Json::array();
    for (bool b : assignment) a.push_back(b ? 1 : 0);
    w["assignment"] = std::move(a);
    return w;
}

}  // namespace

PipelineFiles cusp_pipeline_files(const CuspPipeline& p) {
    PipelineFiles out;
    out.satisfiable = p.satisfiable;

    Json inst;
    inst["schema"] = "semaev/instance/v1";
    inst["route"] = "cusp";
    inst["summation"] = summation_instance_json(p.stage2.instance);
    out.instance = std::move(inst);

    Json cert;
    cert["schema"] = "semaev/certificate/v1";
    cert["route"] = "cusp";
    cert["p"] = p.stage1.gadget.m;
    cert["sat"] = sat_to_json(p.sat);
    cert["stage1"] = subset_instance_to_json(p.stage1.instance);
    Json s2;
    s2["field"] = field_to_json(p.stage2.field);
    Json vv = Json::array();
    for (const auto& v : p.stage2.v) vv.push_back(element_to_json(v));
    s2["v"] = std::move(vv);
    s2["zero_elements"] = p.stage2.zero_elements;
    s2["wprime"] = element_to_json(p.stage2.wprime);
    s2["wprime_zero"] = p.stage2.wprime_zero;
    Json in = Json::array();
    for (const auto& x : p.stage2.instance.inputs) in.push_back(element_to_json(x));
    s2["inputs"] = std::move(in);
    cert["stage2"] = std::move(s2);
    cert["satisfiable"] = p.satisfiable;
    out.certificate = std::move(cert);

    out.witness = witness_json(p.satisfiable, p.signs, p.subset, p.assignment);
    return out;
}

PipelineFiles ec_pipeline_files(const EcPipeline& p, uint64_t seed) {
    PipelineFiles out;
    out.satisfiable = p.satisfiable;

    Json inst;
    inst["schema"] = "semaev/instance/v1";
    inst["route"] = "ec";
    inst["summation"] = summation_instance_json(p.stage2.instance);
    out.instance = std::move(inst);

    Json cert;
    cert["schema"] = "semaev/certificate/v1";
    cert["route"] = "ec";
    cert["seed"] = seed;
    cert["sat"] = sat_to_json(p.sat);
    cert["stage1"] = subset_instance_to_json(p.stage1.instance);
    Json s2;
    s2["curve"] = model_to_json(p.stage2.curve.model);
    s2["point"] = point_to_json(p.stage2.curve.point);
    s2["order"] = p.stage2.curve.order;
    s2["v"] = p.stage2.v;
    s2["zero_elements"] = p.stage2.zero_elements;
    s2["wprime"] = p.stage2.wprime;
    s2["wprime_zero"] = p.stage2.wprime_zero;
    Json in = Json::array();
    for (const auto& x : p.stage2.instance.inputs) in.push_back(element_to_json(x));
    s2["inputs"] = std::move(in);
    cert["stage2"] = std::move(s2);
    cert["satisfiable"] = p.satisfiable;
    out.certificate = std::move(cert);

    out.witness = witness_json(p.satisfiable, p.signs, p.subset, p.assignment);
    return out;
}

bool verify_certificate(const Json& certificate, const Json& witness,
                        std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    try {
        std::string route = certificate.at("route").get<std::string>();
        SatInstance sat = sat_from_json(certificate.at("sat"));
        bool claimed = certificate.at("satisfiable").get<bool>();
        if (route == "cusp") {
            uint64_t p = certificate.at("p").get<uint64_t>();
            CuspPipeline fresh = run_cusp_pipeline(sat, p);
            PipelineFiles files = cusp_pipeline_files(fresh);
            if (files.certificate.at("stage1") != certificate.at("stage1"))
                return fail("stage1 instance does not match the reduction");
            if (files.certificate.at("stage2") != certificate.at("stage2"))
                return fail("stage2 instance does not match the reduction");
            if (fresh.satisfiable != claimed)
                return fail("satisfiability claim contradicts the instance");
            if (!claimed) return witness.is_null() || fail("witness for an unsat claim");
            std::vector<int8_t> signs;
            for (const auto& s : witness.at("signs"))
                signs.push_back(static_cast<int8_t>(s.get<int>()));
            auto subset = pull_back_signs_to_subset(signs, fresh.stage1.instance,
                                                    fresh.stage2.zero_elements);
            if (subset != witness.at("subset").get<std::vector<uint32_t>>())
                return fail("subset stage does not match the sign pull-back");
            auto assignment =
                pull_back_subset_to_assignment(subset, fresh.stage1, sat);
            std::vector<bool> wa;
            for (const auto& b : witness.at("assignment")) wa.push_back(b.get<int>() != 0);
            if (assignment != wa) return fail("assignment does not match the pull-back");
            return true;
        }
        if (route == "ec") {
            uint64_t seed = certificate.at("seed").get<uint64_t>();
            EcPipeline fresh = run_ec_pipeline(sat, seed);
            PipelineFiles files = ec_pipeline_files(fresh, seed);
            if (files.certificate.at("stage1") != certificate.at("stage1"))
                return fail("stage1 instance does not match the reduction");
            if (files.certificate.at("stage2") != certificate.at("stage2"))
                return fail("stage2 instance does not match the reduction");
            if (fresh.satisfiable != claimed)
                return fail("satisfiability claim contradicts the instance");
            if (!claimed) return witness.is_null() || fail("witness for an unsat claim");
            std::vector<int8_t> signs;
            for (const auto& s : witness.at("signs"))
                signs.push_back(static_cast<int8_t>(s.get<int>()));
            auto subset = pull_back_signs_to_subset(signs, fresh.stage1.instance,
                                                    fresh.stage2.zero_elements);
            auto assignment =
                pull_back_subset_to_assignment_int(subset, fresh.stage1, sat);
            std::vector<bool> wa;
            for (const auto& b : witness.at("assignment")) wa.push_back(b.get<int>() != 0);
            if (assignment != wa) return fail("assignment does not match the pull-back");
            return true;
        }
        return fail("unknown route " + route);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

// ---------------------------------------------------------------------------
// Experiments

std::vector<ExperimentRow> run_constrained_rows(const std::vector<uint32_t>& ns, uint32_t trials,
                                 uint64_t seed, const ProfileOptions& opt) {
    std::vector<uint32_t> sorted = ns;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<ExperimentRow> rows;
    for (uint32_t n : sorted) {
        for (uint32_t t = 0; t < trials; ++t) {
            ExperimentRow row;
            row.n = n;
            row.seed = Rng::mix(seed, Rng::mix(n, t));
            auto t0 = std::chrono::steady_clock::now();
            row.inst = build_constrained_instance(n, row.seed);
            row.prof = profile(row.inst.system, opt);
            auto t1 = std::chrono::steady_clock::now();
            row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
    std::ostringstream os;
    os << "n,seed,ffd,solving_degree,matrix_max_dims,wall_time_ms\n";
    for (const auto& r : rows) {
        os << r.n << "," << r.seed << ",";
        if (r.prof.first_fall_degree == 0)
            os << "na";
        else
            os << r.prof.first_fall_degree;
        os << ",";
        if (r.prof.capped)
            os << "capped";
        else if (!r.prof.resolved)
            os << r.prof.d_max << "+";
        else
            os << r.prof.observed_solving_degree;
        os << "," << r.prof.max_rows << "x" << r.prof.max_cols << ","
           << static_cast<uint64_t>(r.wall_ms * 1000) / 1000.0 << "\n";
    }
    return os.str();
}

Json experiment_sidecar(const ExperimentRow& row) {
    Json j;
    j["schema"] = "semaev/ffd-instance/v1";
    j["n"] = row.n;
    j["seed"] = row.seed;
    j["model"] = model_to_json(row.inst.model);
    j["point"] = point_to_json(row.inst.point);
    Json sub = Json::array();
    for (const auto& b : row.inst.subspace) sub.push_back(element_to_json(b));
    j["subspace"] = std::move(sub);
    Json alphas = Json::array();
    for (uint32_t i = 0; i < row.inst.alpha.size(); ++i)
        alphas.push_back(element_to_json(row.inst.alpha.alpha(i)));
    j["alpha"] = std::move(alphas);
    j["vars"] = row.inst.system.vars;
    Json gens = Json::array();
    for (const auto& g : row.inst.system.gens) gens.push_back(g.monos);
    j["generators"] = std::move(gens);
    j["profile"] = profile_to_json(row.prof);
    return j;
}

std::string experiment_summary(const std::vector<ExperimentRow>& rows) {
    std::ostringstream os;
    std::vector<uint32_t> ns;
    for (const auto& r : rows) ns.push_back(r.n);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    uint64_t total = 0, total_ffd2 = 0;
    for (uint32_t n : ns) {
        uint64_t cnt = 0, ffd2 = 0;
        std::map<std::string, uint64_t> dist;
        for (const auto& r : rows) {
            if (r.n != n) continue;
            ++cnt;
            if (r.prof.first_fall_degree == 2) ++ffd2;
            std::string key = r.prof.capped ? "capped"
                              : !r.prof.resolved
                                  ? std::to_string(r.prof.d_max) + "+"
                                  : std::to_string(r.prof.observed_solving_degree);
            ++dist[key];
        }
        total += cnt;
        total_ffd2 += ffd2;
        os << "n=" << n << " trials=" << cnt << " ffd2=" << ffd2 << " sd{";
        bool first = true;
        for (const auto& [k, v] : dist) {
            if (!first) os << ",";
            os << k << ":" << v;
            first = false;
        }
        os << "}\n";
    }
    if (total) {
        os << "ffd=2 rate: " << total_ffd2 << "/" << total << " ("
           << (100.0 * static_cast<double>(total_ffd2) / static_cast<double>(total))
           << "%)\n";
    }
    return os.str();
}

}  // namespace semaev
