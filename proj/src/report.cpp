#include "gausstoric/report.hpp"

namespace gausstoric {

ordered_json json_int(const Int& z) { return z.get_str(); }

Int int_from_json(const ordered_json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  throw input_error("expected an integer (number or decimal string)");
}

ordered_json json_vec(const IntVec& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(json_int(x));
  return out;
}

IntVec vec_from_json(const ordered_json& j) {
  if (!j.is_array()) throw input_error("expected an array of integers");
  IntVec out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

ordered_json json_matrix(const IntMat& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(json_vec(m.row(i)));
  return out;
}

IntMat matrix_from_json(const ordered_json& j, std::size_t expected_cols) {
  if (!j.is_array()) throw input_error("expected an array of rows");
  std::vector<IntVec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  std::size_t cols = rows.empty() ? expected_cols : rows[0].size();
  return IntMat::from_rows(rows, cols);
}

ordered_json json_points(const std::vector<IntVec>& pts) {
  ordered_json out = ordered_json::array();
  for (const auto& p : pts) out.push_back(json_vec(p));
  return out;
}

AnalysisReport make_analysis_report(const GaussStructure& s,
                                    std::size_t element_cap) {
  AnalysisReport r;
  r.characteristic = s.input.characteristic.p;
  r.mode = s.mode == AnalysisMode::full ? "full" : "fast";
  r.input_rank = s.original.ambient_rank;
  r.input_points = s.original.points;
  r.origin_index = s.normalization.origin_index;
  r.origin = s.normalization.origin;
  r.basis = s.normalization.change_of_basis;
  r.normalized_rank = s.input.ambient_rank;
  r.normalized_points = s.input.points;
  r.b_size = Int(s.b.sums.size());
  r.witness_count = s.b.witness_count;
  r.possibly_partial = s.b.possibly_partial;
  for (std::size_t i = 0; i < s.b.sums.size() && i < element_cap; ++i)
    r.b_elements.push_back(s.b.sums[i]);
  r.b_elements_truncated = s.b.sums.size() > element_cap;
  r.lattice_basis = s.lattice.basis;
  r.saturation_basis = s.saturation.basis;
  r.projection_matrix = s.projection.matrix;
  r.projection_splitting = s.projection.splitting;
  r.fiber_rank = s.fiber_config.ambient_rank;
  r.fiber_points = s.fiber_config.points;
  r.has_image = s.image_config.has_value();
  if (s.image_config) {
    r.image_rank = s.image_config->ambient_rank;
    r.image_points = s.image_config->points;
  }
  r.defect = Int(s.invariants.defect);
  r.rank = Int(s.invariants.rank);
  r.deg_g2 = s.invariants.deg_g2;
  r.sep_deg = s.invariants.sep_deg;
  r.insep_deg = s.invariants.insep_deg;
  r.component_count = s.invariants.component_count;
  r.separable = s.invariants.separable;
  r.birational = s.invariants.birational;
  r.degenerate = s.invariants.degenerate;
  r.warnings = s.warnings;
  return r;
}

ordered_json emit_analysis_report(const AnalysisReport& r) {
  ordered_json j;
  j["schema"] = r.schema;
  j["characteristic"] = json_int(r.characteristic);
  j["mode"] = r.mode;
  j["input"] = {{"ambient_rank", json_int(Int(r.input_rank))},
                {"points", json_points(r.input_points)}};
  j["normalization"] = {{"origin_index", json_int(Int(r.origin_index))},
                        {"origin", json_vec(r.origin)},
                        {"basis", json_matrix(r.basis)}};
  j["normalized"] = {{"ambient_rank", json_int(Int(r.normalized_rank))},
                     {"points", json_points(r.normalized_points)}};
  j["spanning_sums"] = {{"size", json_int(r.b_size)},
                        {"witness_count", json_int(r.witness_count)},
                        {"possibly_partial", r.possibly_partial},
                        {"elements", json_points(r.b_elements)},
                        {"elements_truncated", r.b_elements_truncated}};
  j["lattice"] = {{"rank", json_int(Int(r.lattice_basis.rows()))},
                  {"basis", json_matrix(r.lattice_basis)}};
  j["saturation"] = {{"rank", json_int(Int(r.saturation_basis.rows()))},
                     {"basis", json_matrix(r.saturation_basis)}};
  j["projection"] = {{"matrix", json_matrix(r.projection_matrix)},
                     {"splitting", json_matrix(r.projection_splitting)}};
  j["fiber_configuration"] = {{"ambient_rank", json_int(Int(r.fiber_rank))},
                              {"points", json_points(r.fiber_points)}};
  if (r.has_image)
    j["image_configuration"] = {{"ambient_rank", json_int(Int(r.image_rank))},
                                {"points", json_points(r.image_points)}};
  else
    j["image_configuration"] = nullptr;
  j["invariants"] = {{"defect", json_int(r.defect)},
                     {"rank", json_int(r.rank)},
                     {"deg_g2", json_int(r.deg_g2)},
                     {"sep_deg", json_int(r.sep_deg)},
                     {"insep_deg", json_int(r.insep_deg)},
                     {"component_count", json_int(r.component_count)},
                     {"separable", r.separable},
                     {"birational", r.birational},
                     {"degenerate", r.degenerate}};
  j["warnings"] = r.warnings;
  return j;
}

namespace {

std::vector<IntVec> points_from_json(const ordered_json& j) {
  std::vector<IntVec> out;
  for (const auto& p : j) out.push_back(vec_from_json(p));
  return out;
}

std::size_t size_from_json(const ordered_json& j) {
  return static_cast<std::size_t>(int_from_json(j).get_ui());
}

}  // namespace

AnalysisReport parse_analysis_report(const ordered_json& j) {
  AnalysisReport r;
  r.schema = j.at("schema").get<std::string>();
  r.characteristic = int_from_json(j.at("characteristic"));
  r.mode = j.at("mode").get<std::string>();
  r.input_rank = size_from_json(j.at("input").at("ambient_rank"));
  r.input_points = points_from_json(j.at("input").at("points"));
  r.origin_index = size_from_json(j.at("normalization").at("origin_index"));
  r.origin = vec_from_json(j.at("normalization").at("origin"));
  r.basis = matrix_from_json(j.at("normalization").at("basis"), r.input_rank);
  r.normalized_rank = size_from_json(j.at("normalized").at("ambient_rank"));
  r.normalized_points = points_from_json(j.at("normalized").at("points"));
  const auto& b = j.at("spanning_sums");
  r.b_size = int_from_json(b.at("size"));
  r.witness_count = int_from_json(b.at("witness_count"));
  r.possibly_partial = b.at("possibly_partial").get<bool>();
  r.b_elements = points_from_json(b.at("elements"));
  r.b_elements_truncated = b.at("elements_truncated").get<bool>();
  r.lattice_basis =
      matrix_from_json(j.at("lattice").at("basis"), r.normalized_rank);
  r.saturation_basis =
      matrix_from_json(j.at("saturation").at("basis"), r.normalized_rank);
  std::size_t corank = r.normalized_rank - r.lattice_basis.rows();
  r.projection_matrix =
      matrix_from_json(j.at("projection").at("matrix"), corank);
  r.projection_splitting =
      matrix_from_json(j.at("projection").at("splitting"), r.normalized_rank);
  r.fiber_rank = size_from_json(j.at("fiber_configuration").at("ambient_rank"));
  r.fiber_points = points_from_json(j.at("fiber_configuration").at("points"));
  r.has_image = !j.at("image_configuration").is_null();
  if (r.has_image) {
    r.image_rank =
        size_from_json(j.at("image_configuration").at("ambient_rank"));
    r.image_points = points_from_json(j.at("image_configuration").at("points"));
  }
  const auto& inv = j.at("invariants");
  r.defect = int_from_json(inv.at("defect"));
  r.rank = int_from_json(inv.at("rank"));
  r.deg_g2 = int_from_json(inv.at("deg_g2"));
  r.sep_deg = int_from_json(inv.at("sep_deg"));
  r.insep_deg = int_from_json(inv.at("insep_deg"));
  r.component_count = int_from_json(inv.at("component_count"));
  r.separable = inv.at("separable").get<bool>();
  r.birational = inv.at("birational").get<bool>();
  r.degenerate = inv.at("degenerate").get<bool>();
  for (const auto& w : j.at("warnings")) r.warnings.push_back(w.get<std::string>());
  return r;
}

ordered_json developability_report_json(const PointConfiguration& config,
                                        const DevelopabilityReport& rep) {
  ordered_json j;
  j["schema"] = "gausstoric/developability/1";
  j["characteristic"] = json_int(config.characteristic.p);
  j["input"] = {{"ambient_rank", json_int(Int(config.ambient_rank))},
                {"points", json_points(config.points)}};
  j["projection"] = json_matrix(rep.projection);
  j["lhs"] = json_int(rep.lhs);
  j["rhs"] = json_int(rep.rhs);
  j["developable"] = rep.developable;
  if (rep.cross_check)
    j["cross_check"] = *rep.cross_check;
  else
    j["cross_check"] = nullptr;
  return j;
}

ordered_json decomposition_report_json(const GaussStructure& s,
                                       const CayleyDecomposition& d,
                                       const JoinReport& jr) {
  ordered_json j;
  j["schema"] = "gausstoric/decomposition/1";
  j["characteristic"] = json_int(s.input.characteristic.p);
  j["defect"] = json_int(Int(d.l));
  ordered_json parts = ordered_json::array();
  for (const auto& part : d.parts)
    parts.push_back({{"ambient_rank", json_int(Int(part.ambient_rank))},
                     {"points", json_points(part.points)}});
  j["parts"] = parts;
  j["identification"] = json_matrix(d.identification);
  j["splitting"] = json_matrix(d.splitting_used);
  ordered_json gaps = ordered_json::array();
  for (const auto& g : jr.per_part_gaps) gaps.push_back(json_int(g));
  j["join"] = {{"join_dim", json_int(jr.join_dim)},
               {"codimension", json_int(jr.codimension)},
               {"per_part_gaps", gaps},
               {"is_join", jr.is_join}};
  return j;
}

ordered_json construction_report_json(const ConstructionResult& c) {
  ordered_json j;
  j["schema"] = "gausstoric/construction/1";
  j["generator"] = c.generator;
  ordered_json params;
  for (const auto& [k, v] : c.parameters) params[k] = v;
  j["parameters"] = params;
  j["configuration"] = {
      {"ambient_rank", json_int(Int(c.config.ambient_rank))},
      {"characteristic", json_int(c.config.characteristic.p)},
      {"points", json_points(c.config.points)}};
  return j;
}

ordered_json sweep_report_json(const SweepOptions& opts,
                               const SweepSummary& summary) {
  ordered_json j;
  j["schema"] = "gausstoric/verification/1";
  j["seed"] = json_int(Int(static_cast<unsigned long>(opts.seed)));
  j["samples_per_characteristic"] = json_int(Int(opts.samples));
  ordered_json chars = ordered_json::array();
  for (const auto& p : opts.characteristics) chars.push_back(json_int(p));
  j["characteristics"] = chars;
  j["configurations_checked"] = json_int(Int(summary.configs));
  j["points_checked"] = json_int(Int(summary.points));
  j["disagreements"] = json_int(Int(summary.disagreements));
  j["failures"] = summary.failures;
  return j;
}

ordered_json error_json(const std::string& kind, const std::string& message) {
  ordered_json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

std::string dump_report(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace gausstoric
