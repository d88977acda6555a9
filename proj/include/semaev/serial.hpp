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

#ifndef SEMAEV_SERIAL_HPP
#define SEMAEV_SERIAL_HPP

#include <json.hpp>

#include "semaev/descent.hpp"
#include "semaev/gbprofiler.hpp"
#include "semaev/reductions.hpp"
#include "semaev/sumpoly.hpp"

namespace semaev {

using Json = nlohmann::ordered_json;

Json field_to_json(const Field* f);                 // {p, n, modulus}
const Field* field_from_json(const Json& j);
Json element_to_json(const FieldElement& a);        // coordinate array
FieldElement element_from_json(const Json& j, const Field* f);
Json model_to_json(const WeierstrassModel& m);      // {field, a}
WeierstrassModel model_from_json(const Json& j);
Json point_to_json(const CurvePoint& p);            // "inf" or {x, y}
CurvePoint point_from_json(const Json& j, const WeierstrassModel& m);
Json poly_to_json(const MultiPoly& p);              // {field, vars, terms}
MultiPoly poly_from_json(const Json& j);
Json descent_to_json(const DescentResult& d, const Basis& alpha);
Json subset_instance_to_json(const SubsetSumInstance& inst);  // {group, elements, target}
SubsetSumInstance subset_instance_from_json(const Json& j);
Json sat_to_json(const SatInstance& sat);
SatInstance sat_from_json(const Json& j);
Json profile_to_json(const DegreeProfile& prof);

// Full reduction chains: a self-contained certificate, the downstream
// instance, and (for satisfiable inputs) the witness bundle.
struct PipelineFiles {
    Json instance;
    Json certificate;
    Json witness;  // null when unsatisfiable
    bool satisfiable = false;
};
PipelineFiles cusp_pipeline_files(const CuspPipeline& p);
PipelineFiles ec_pipeline_files(const EcPipeline& p, uint64_t seed);

// Re-run of a certificate + witness pair; false on any mismatch.
bool verify_certificate(const Json& certificate, const Json& witness,
                        std::string* reason);

// ---------------------------------------------------------------------------
// Experiment batches

struct ExperimentRow {
    uint32_t n = 0;
    uint64_t seed = 0;
    ConstrainedInstance inst;
    DegreeProfile prof;
    double wall_ms = 0;
};

std::vector<ExperimentRow> run_constrained_rows(const std::vector<uint32_t>& ns, uint32_t trials,
                                 uint64_t seed, const ProfileOptions& opt);
// n,seed,ffd,solving_degree,matrix_max_dims,wall_time_ms
std::string experiment_csv(const std::vector<ExperimentRow>& rows);
Json experiment_sidecar(const ExperimentRow& row);
std::string experiment_summary(const std::vector<ExperimentRow>& rows);

}  // namespace semaev

#endif
