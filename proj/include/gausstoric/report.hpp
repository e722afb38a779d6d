#pragma once

#include <json.hpp>

#include "gausstoric/constructions.hpp"
#include "gausstoric/criteria.hpp"
#include "gausstoric/oracle.hpp"

namespace gausstoric {

using ordered_json = nlohmann::ordered_json;

// Report schema: every integer is an exact decimal string, matrices are
// arrays of row arrays, every field is always present.

ordered_json json_int(const Int& z);
Int int_from_json(const ordered_json& j);
ordered_json json_vec(const IntVec& v);
IntVec vec_from_json(const ordered_json& j);
ordered_json json_matrix(const IntMat& m);
IntMat matrix_from_json(const ordered_json& j, std::size_t expected_cols);
ordered_json json_points(const std::vector<IntVec>& pts);

/// Typed mirror of the analysis report; parse and emit are mutually
/// inverse, so reports survive a round trip byte for byte.
struct AnalysisReport {
  std::string schema = "gausstoric/analysis/1";
  Int characteristic{0};
  std::string mode;
  std::size_t input_rank = 0;
  std::vector<IntVec> input_points;
  std::size_t origin_index = 0;
  IntVec origin;
  IntMat basis;
  std::size_t normalized_rank = 0;
  std::vector<IntVec> normalized_points;
  Int b_size{0};
  Int witness_count{0};
  bool possibly_partial = false;
  std::vector<IntVec> b_elements;
  bool b_elements_truncated = false;
  IntMat lattice_basis;
  IntMat saturation_basis;
  IntMat projection_matrix;
  IntMat projection_splitting;
  std::size_t fiber_rank = 0;
  std::vector<IntVec> fiber_points;
  bool has_image = false;
  std::size_t image_rank = 0;
  std::vector<IntVec> image_points;
  Int defect{0};
  Int rank{0};
  Int deg_g2{1};
  Int sep_deg{1};
  Int insep_deg{1};
  Int component_count{1};
  bool separable = false;
  bool birational = false;
  bool degenerate = false;
  std::vector<std::string> warnings;
};

AnalysisReport make_analysis_report(const GaussStructure& s,
                                    std::size_t element_cap = 64);
ordered_json emit_analysis_report(const AnalysisReport& r);
AnalysisReport parse_analysis_report(const ordered_json& j);

ordered_json developability_report_json(const PointConfiguration& config,
                                        const DevelopabilityReport& rep);
ordered_json decomposition_report_json(const GaussStructure& s,
                                       const CayleyDecomposition& d,
                                       const JoinReport& j);
ordered_json construction_report_json(const ConstructionResult& c);
ordered_json sweep_report_json(const SweepOptions& opts,
                               const SweepSummary& summary);
ordered_json error_json(const std::string& kind, const std::string& message);

std::string dump_report(const ordered_json& j);

}  // namespace gausstoric
