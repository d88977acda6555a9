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

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "semaev/serial.hpp"

using namespace semaev;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

uint64_t mem_budget_bytes(uint64_t flag_mb) {
    if (flag_mb != 0) return flag_mb << 20;
    if (const char* env = std::getenv("SEMAEV_MEM_MB")) {
        uint64_t mb = std::strtoull(env, nullptr, 10);
        if (mb != 0) return mb << 20;
    }
    return 4ULL << 30;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path.string());
    out << content;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct SumpolyArgs {
    uint64_t p = 0;
    uint32_t n = 1;
    std::vector<uint64_t> modulus;
    std::vector<uint64_t> a;
    uint32_t r = 3;
    bool json = false;
};

int cmd_sumpoly_compute(const SumpolyArgs& args) {
    const Field* f = args.modulus.empty() ? Field::get(args.p, args.n)
                                          : Field::get(args.p, args.n, args.modulus);
    if (args.a.size() != 5)
        throw std::invalid_argument("--a needs the five coefficients a1,a2,a3,a4,a6");
    std::array<FieldElement, 5> coeffs = {f->from_uint(args.a[0]), f->from_uint(args.a[1]),
                                          f->from_uint(args.a[2]), f->from_uint(args.a[3]),
                                          f->from_uint(args.a[4])};
    WeierstrassModel m = WeierstrassModel::make(f, coeffs);
    if (args.r < 2 || args.r > kMaxSummationArity)
        throw std::invalid_argument("--r must be between 2 and 7");
    MultiPoly s = summation_poly(m, args.r);
    if (args.json) {
        Json j;
        j["schema"] = "semaev/sumpoly/v1";
        j["r"] = args.r;
        j["model"] = model_to_json(m);
        j["polynomial"] = poly_to_json(s);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << s.to_string() << "\n";
    }
    return kExitOk;
}

struct DescentCheckArgs {
    uint32_t n = 4;
    uint64_t seed = 1;
    std::string mode = "auto";
    bool json = false;
};

std::pair<WeierstrassModel, CurvePoint> draw_curve_and_point(uint32_t n, uint64_t seed) {
    const Field* f = Field::get(2, n);
    Rng rng(Rng::mix(seed, Rng::mix(0xdecaf, n)));
    WeierstrassModel m = random_ordinary_model(f, rng);
    for (int tries = 0; tries < 4096; ++tries) {
        CurvePoint p = random_point(m, rng);
        if (!scalar_mul(m, 2, p).is_infinity()) return {m, p};
        std::cerr << "note: re-drew the point (2-torsion draw)\n";
    }
    throw std::runtime_error("no non-2-torsion point found");
}

int cmd_check_w7(const DescentCheckArgs& args) {
    if (args.n < 3 || args.n > 10)
        throw std::invalid_argument("check-w7 supports n in 3..10");
    TraceCheckMode mode = TraceCheckMode::Auto;
    if (args.mode == "exhaustive") mode = TraceCheckMode::Exhaustive;
    else if (args.mode == "symbolic") mode = TraceCheckMode::Symbolic;
    else if (args.mode != "auto") throw std::invalid_argument("bad --mode");
    if (mode == TraceCheckMode::Exhaustive && args.n > 6)
        throw std::invalid_argument("exhaustive mode is capped at n <= 6");

    auto [m, p] = draw_curve_and_point(args.n, args.seed);
    auto rep = trace_quotient_check(m, p, mode);
    bool pass = rep.ok();
    if (args.json) {
        Json j;
        j["schema"] = "semaev/check-w7/v1";
        j["n"] = args.n;
        j["seed"] = args.seed;
        j["model"] = model_to_json(m);
        j["point"] = point_to_json(p);
        j["identity_holds"] = rep.identity_holds;
        j["scalar_identity"] = rep.scalar_identity;
        j["zero_at_doubling"] = rep.zero_at_doubling;
        j["exhaustive_ran"] = rep.exhaustive_ran;
        j["symbolic_ran"] = rep.symbolic_ran;
        j["pass"] = pass;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (pass ? "PASS" : "FAIL") << " check-w7 n=" << args.n
                  << " seed=" << args.seed << "\n";
    }
    return pass ? kExitOk : kExitRefuted;
}

int cmd_check_w8(const DescentCheckArgs& args) {
    if (args.n < 3 || args.n > 10)
        throw std::invalid_argument("check-w8 supports n in 3..10");
    auto [m, p] = draw_curve_and_point(args.n, args.seed);
    Rng rng(Rng::mix(args.seed, 0xba515));
    bool pass = true;
    Json bases = Json::array();
    for (int bt = 0; bt < 3; ++bt) {
        Basis alpha = bt == 0 ? power_basis(m.field) : random_basis(m.field, rng);
        auto rep = descent_combination_check(m, p, alpha);
        pass = pass && rep.equal && rep.lhs_degree <= 1 &&
               rep.constant == trace_morphism(m, p);
        Json b;
        Json alphas = Json::array();
        for (uint32_t i = 0; i < alpha.size(); ++i)
            alphas.push_back(element_to_json(alpha.alpha(i)));
        b["basis"] = std::move(alphas);
        b["weights"] = rep.weights;
        b["equal"] = rep.equal;
        b["lhs_degree"] = rep.lhs_degree;
        b["constant"] = rep.constant;
        b["combination"] = rep.lhs.to_string();
        bases.push_back(std::move(b));
    }
    if (args.json) {
        Json j;
        j["schema"] = "semaev/check-w8/v1";
        j["n"] = args.n;
        j["seed"] = args.seed;
        j["model"] = model_to_json(m);
        j["point"] = point_to_json(p);
        j["trials"] = std::move(bases);
        j["pass"] = pass;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (pass ? "PASS" : "FAIL") << " check-w8 n=" << args.n
                  << " seed=" << args.seed << "\n";
    }
    return pass ? kExitOk : kExitRefuted;
}

struct FfdArgs {
    std::vector<uint32_t> n_list;
    uint32_t trials = 20;
    uint64_t seed = 1;
    uint32_t dmax = 5;
    uint64_t mem_mb = 0;
    std::string out = "-";
    std::string sidecar_dir;
    bool json = false;
};

int cmd_ffd_run(const FfdArgs& args) {
    ProfileOptions opt;
    opt.d_max = args.dmax;
    opt.mem_budget_bytes = mem_budget_bytes(args.mem_mb);
    auto rows = run_constrained_rows(args.n_list, args.trials, args.seed, opt);
    std::string csv = experiment_csv(rows);
    if (args.out == "-") {
        std::cout << csv;
    } else {
        write_file(args.out, csv);
    }
    if (!args.sidecar_dir.empty()) {
        std::filesystem::create_directories(args.sidecar_dir);
        for (const auto& r : rows) {
            std::filesystem::path p =
                std::filesystem::path(args.sidecar_dir) /
                ("instance_n" + std::to_string(r.n) + "_seed" + std::to_string(r.seed) +
                 ".json");
            write_file(p, experiment_sidecar(r).dump(2) + "\n");
        }
    }
    if (args.json) {
        Json j;
        j["schema"] = "semaev/ffd-run/v1";
        j["csv"] = csv;
        j["summary"] = experiment_summary(rows);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << experiment_summary(rows);
    }
    bool capped = false;
    for (const auto& r : rows) capped = capped || r.prof.capped;
    return capped ? kExitCap : kExitOk;
}

struct ReduceArgs {
    std::string in;
    std::string route = "cusp";
    uint64_t p = 3;
    uint64_t seed = 1;
    std::string out;
    bool json = false;
};

int cmd_reduce(const ReduceArgs& args) {
    SatInstance sat = parse_dimacs(read_file(args.in));
    PipelineFiles files;
    if (args.route == "cusp") {
        files = cusp_pipeline_files(run_cusp_pipeline(sat, args.p));
    } else if (args.route == "ec") {
        files = ec_pipeline_files(run_ec_pipeline(sat, args.seed), args.seed);
    } else {
        throw std::invalid_argument("--route must be cusp or ec");
    }
    if (!args.out.empty()) {
        std::filesystem::create_directories(args.out);
        std::filesystem::path dir(args.out);
        write_file(dir / "instance.json", files.instance.dump(2) + "\n");
        write_file(dir / "certificate.json", files.certificate.dump(2) + "\n");
        if (files.satisfiable)
            write_file(dir / "witness.json", files.witness.dump(2) + "\n");
    }
    if (args.json) {
        Json j;
        j["schema"] = "semaev/reduce/v1";
        j["satisfiable"] = files.satisfiable;
        j["instance"] = files.instance;
        j["certificate"] = files.certificate;
        if (files.satisfiable) j["witness"] = files.witness;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (files.satisfiable ? "SAT" : "UNSAT") << "\n";
    }
    return files.satisfiable ? kExitOk : kExitRefuted;
}

struct VerifyArgs {
    std::string instance;
    std::string witness;
    bool json = false;
};

int cmd_verify(const VerifyArgs& args) {
    Json cert = Json::parse(read_file(args.instance));
    Json wit;
    if (!args.witness.empty()) wit = Json::parse(read_file(args.witness));
    std::string reason;
    bool ok = verify_certificate(cert, wit, &reason);
    if (args.json) {
        Json j;
        j["schema"] = "semaev/verify/v1";
        j["valid"] = ok;
        if (!ok) j["reason"] = reason;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (ok ? "VALID" : "INVALID: " + reason) << "\n";
    }
    return ok ? kExitOk : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"summation polynomials, Weil descent and reduction chains"};
    app.require_subcommand(1);

    SumpolyArgs sp;
    auto* sumpoly = app.add_subcommand("sumpoly", "summation polynomial tools");
    sumpoly->require_subcommand(1);
    auto* compute = sumpoly->add_subcommand("compute", "construct S_r for a model");
    compute->add_option("--p", sp.p, "field characteristic")->required();
    compute->add_option("--n", sp.n, "extension degree");
    compute->add_option("--modulus", sp.modulus, "modulus coefficients c0,c1,...")
        ->delimiter(',');
    compute->add_option("--a", sp.a, "a1,a2,a3,a4,a6 as base-p integer encodings")
        ->delimiter(',')
        ->required();
    compute->add_option("--r", sp.r, "arity (2..7)")->required();
    compute->add_flag("--json", sp.json, "JSON output");

    DescentCheckArgs cw7_args, cw8_args;
    auto* descent = app.add_subcommand("descent", "descent identity checks");
    descent->require_subcommand(1);
    auto* cw7 = descent->add_subcommand("check-w7", "trace-quotient identity");
    cw7->add_option("--n", cw7_args.n, "extension degree (3..10)")->required();
    cw7->add_option("--seed", cw7_args.seed, "random seed")->required();
    cw7->add_option("--mode", cw7_args.mode, "auto|exhaustive|symbolic");
    cw7->add_flag("--json", cw7_args.json, "JSON output");
    auto* cw8 = descent->add_subcommand("check-w8", "descended combination identity");
    cw8->add_option("--n", cw8_args.n, "extension degree (3..10)")->required();
    cw8->add_option("--seed", cw8_args.seed, "random seed")->required();
    cw8->add_flag("--json", cw8_args.json, "JSON output");

    FfdArgs ffd;
    auto* ffdcmd = app.add_subcommand("ffd", "first-fall-degree experiments");
    ffdcmd->require_subcommand(1);
    auto* run = ffdcmd->add_subcommand("run", "run the experiment matrix");
    run->add_option("--n-list", ffd.n_list, "extension degrees")->delimiter(',')->required();
    run->add_option("--trials", ffd.trials, "trials per degree")->required();
    run->add_option("--seed", ffd.seed, "master seed")->required();
    run->add_option("--dmax", ffd.dmax, "degree cap (default 5)");
    run->add_option("--mem", ffd.mem_mb, "matrix budget in MiB");
    run->add_option("--out", ffd.out, "CSV path or - for stdout");
    run->add_option("--sidecar-dir", ffd.sidecar_dir, "per-instance JSON directory");
    run->add_flag("--json", ffd.json, "JSON output");

    ReduceArgs red;
    auto* reduce = app.add_subcommand("reduce", "run a reduction chain on DIMACS input");
    reduce->add_option("--in", red.in, "DIMACS CNF file")->required();
    reduce->add_option("--route", red.route, "cusp|ec");
    reduce->add_option("--p", red.p, "odd prime for the cusp route (default 3)");
    reduce->add_option("--seed", red.seed, "curve-search seed for the ec route");
    reduce->add_option("--out", red.out, "output directory");
    reduce->add_flag("--json", red.json, "JSON output");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "check an instance/witness pair");
    verify->add_option("--instance", ver.instance, "certificate JSON")->required();
    verify->add_option("--witness", ver.witness, "witness JSON");
    verify->add_flag("--json", ver.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return cmd_sumpoly_compute(sp);
        if (cw7->parsed()) return cmd_check_w7(cw7_args);
        if (cw8->parsed()) return cmd_check_w8(cw8_args);
        if (run->parsed()) return cmd_ffd_run(ffd);
        if (reduce->parsed()) return cmd_reduce(red);
        if (verify->parsed()) return cmd_verify(ver);
    } catch (const CapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitCap;
    } catch (const DimacsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
