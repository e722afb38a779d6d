#include "gausstoric/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gausstoric::cli {

namespace {

std::string read_stream(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ParsedInput parse_json_input(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw input_error(std::string("malformed JSON input: ") + e.what());
  }
  if (!j.is_object() || !j.contains("points"))
    throw input_error("input JSON must be an object with a \"points\" field");
  ParsedInput out;
  for (const auto& p : j.at("points")) out.points.push_back(vec_from_json(p));
  if (j.contains("characteristic") && !j.at("characteristic").is_null())
    out.characteristic = int_from_json(j.at("characteristic"));
  return out;
}

ParsedInput parse_text_input(const std::string& text) {
  ParsedInput out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    IntVec point;
    std::string tok;
    while (ls >> tok) {
      try {
        point.emplace_back(tok);
      } catch (const std::exception&) {
        throw input_error("malformed coordinate: " + tok);
      }
    }
    if (!point.empty()) out.points.push_back(std::move(point));
  }
  if (out.points.empty()) throw input_error("no points in input");
  return out;
}

template <class Fn>
int guarded(std::ostream& out, std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const input_error& e) {
    out << dump_report(error_json("input", e.what()));
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const precondition_error& e) {
    out << dump_report(error_json("precondition", e.what()));
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}

void render_invariants_text(const AnalysisReport& r, std::ostream& out) {
  out << "characteristic: " << r.characteristic.get_str() << "\n"
      << "normalized dimension: " << r.normalized_rank << "\n"
      << "#B: " << r.b_size.get_str()
      << (r.possibly_partial ? " (lower bound, fast mode)" : "") << "\n"
      << "defect: " << r.defect.get_str() << "\n"
      << "rank: " << r.rank.get_str() << "\n"
      << "deg(g2): " << r.deg_g2.get_str() << " = " << r.sep_deg.get_str()
      << " (separable) x " << r.insep_deg.get_str() << " (inseparable)\n"
      << "fiber components: " << r.component_count.get_str() << "\n"
      << "separable: " << (r.separable ? "yes" : "no") << "\n"
      << "birational: " << (r.birational ? "yes" : "no") << "\n"
      << "degenerate: " << (r.degenerate ? "yes" : "no") << "\n";
}

}  // namespace

ParsedInput parse_points_input(const std::string& spec) {
  std::string text;
  if (spec == "-") {
    text = read_stream(std::cin);
  } else if (!spec.empty() && (spec[0] == '{' || spec[0] == '[')) {
    text = spec;
  } else {
    std::ifstream f(spec);
    if (!f) throw input_error("cannot open input file: " + spec);
    text = read_stream(f);
  }
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw input_error("empty input");
  if (text[first] == '{') return parse_json_input(text);
  return parse_text_input(text);
}

IntMat parse_matrix_arg(const std::string& text, std::size_t expected_cols) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw input_error(std::string("malformed matrix argument: ") + e.what());
  }
  return matrix_from_json(j, expected_cols);
}

Int resolve_characteristic(const std::optional<std::string>& flag,
                           const std::optional<Int>& from_file) {
  if (flag) {
    try {
      return Int(*flag);
    } catch (const std::exception&) {
      throw input_error("malformed characteristic: " + *flag);
    }
  }
  if (from_file) return *from_file;
  return Int(0);
}

unsigned threads_from_env() {
  const char* env = std::getenv("GAUSSTORIC_THREADS");
  if (!env) return 1;
  long v = std::strtol(env, nullptr, 10);
  return v > 1 ? static_cast<unsigned>(v) : 1;
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out,
                std::ostream& err) {
  return guarded(out, err, [&]() {
    ParsedInput in = parse_points_input(args.input);
    Int p = resolve_characteristic(args.characteristic, in.characteristic);
    AnalyzeOptions opts;
    if (args.mode == "full")
      opts.mode = AnalysisMode::full;
    else if (args.mode == "fast")
      opts.mode = AnalysisMode::invariants_only;
    else
      throw input_error("mode must be full or fast");
    opts.dedup = args.lenient ? DedupMode::lenient : DedupMode::strict;
    opts.threads = args.threads;
    opts.witness_limit = args.witness_limit;
    GaussStructure s = analyze(in.points, p, opts);
    AnalysisReport rep = make_analysis_report(s);
    if (args.text)
      render_invariants_text(rep, out);
    else
      out << dump_report(emit_analysis_report(rep));
    return kExitOk;
  });
}

int cmd_developable(const DevelopableArgs& args, std::ostream& out,
                    std::ostream& err) {
  return guarded(out, err, [&]() {
    ParsedInput in = parse_points_input(args.input);
    Int p = resolve_characteristic(args.characteristic, in.characteristic);
    PointConfiguration config = validate(in.points, p).config;
    IntMat pi = parse_matrix_arg(args.projection, config.ambient_rank);
    AnalyzeOptions opts;
    opts.threads = args.threads;
    GaussStructure s = analyze(config, opts);
    DevelopabilityReport rep = developable(s.input, pi, &s);
    if (args.text)
      out << "lhs: " << rep.lhs.get_str() << "\nrhs: " << rep.rhs.get_str()
          << "\ndevelopable: " << (rep.developable ? "yes" : "no") << "\n";
    else
      out << dump_report(developability_report_json(s.input, rep));
    return rep.developable ? kExitOk : kExitFalse;
  });
}

int cmd_decompose(const DecomposeArgs& args, std::ostream& out,
                  std::ostream& err) {
  return guarded(out, err, [&]() {
    ParsedInput in = parse_points_input(args.input);
    Int p = resolve_characteristic(args.characteristic, in.characteristic);
    AnalyzeOptions opts;
    opts.threads = args.threads;
    GaussStructure s = analyze(in.points, p, opts);
    CayleyDecomposition d = cayley_decompose(s);
    JoinReport jr = join_report(d);
    if (p == 0 && !jr.is_join)
      throw std::logic_error("characteristic-zero join with positive codimension");
    if (args.text) {
      out << "defect: " << d.l << "\nparts:";
      for (const auto& part : d.parts) out << " " << part.size();
      out << "\njoin codimension: " << jr.codimension.get_str() << "\n";
    } else {
      out << dump_report(decomposition_report_json(s, d, jr));
    }
    return kExitOk;
  });
}

namespace {

struct ClaimCheck {
  std::string claim;
  bool pass;
};

std::vector<ClaimCheck> verify_construction(
    const ConstructionResult& built, const std::optional<PointConfiguration>& fiber,
    const std::optional<PointConfiguration>& image, const Int& c,
    std::optional<unsigned long> rank, std::optional<std::size_t> expect_size,
    unsigned threads) {
  AnalyzeOptions opts;
  opts.threads = threads;
  GaussStructure s = analyze(built.config, opts);
  std::vector<ClaimCheck> checks;
  if (built.generator == "hypersurface" || built.generator == "codim2") {
    checks.push_back({"birational", s.invariants.birational});
    return checks;
  }
  checks.push_back(
      {"component_count", s.invariants.component_count == c});
  if (rank)
    checks.push_back({"rank", s.invariants.rank == *rank});
  if (fiber)
    checks.push_back(
        {"fiber", affinely_isomorphic(s.fiber_config, *fiber).has_value()});
  if (image)
    checks.push_back({"image", affinely_isomorphic(image_configuration(s),
                                                   *image)
                                   .has_value()});
  if (expect_size)
    checks.push_back({"size", built.config.size() == *expect_size});
  return checks;
}

}  // namespace

int cmd_construct(const ConstructArgs& args, std::ostream& out,
                  std::ostream& err) {
  return guarded(out, err, [&]() {
    Int p = resolve_characteristic(args.characteristic, std::nullopt);
    Int c;
    try {
      c = Int(args.components);
    } catch (const std::exception&) {
      throw input_error("malformed component count: " + args.components);
    }

    ConstructionResult built;
    std::optional<PointConfiguration> fiber, image;
    std::optional<unsigned long> expect_rank;
    std::optional<std::size_t> expect_size;

    if (args.theorem == "5.1" || args.theorem == "5.5") {
      if (!args.fiber)
        throw input_error("--fiber is required for this generator");
      ParsedInput fin = parse_points_input(*args.fiber);
      fiber = validate(fin.points, p).config;
    }
    if (args.theorem == "5.1") {
      if (!args.image)
        throw input_error("--image is required for this generator");
      ParsedInput iin = parse_points_input(*args.image);
      image = validate(iin.points, p).config;
      built = with_fiber_and_image(*fiber, *image, c, p);
      expect_rank = 0;
      expect_size = built.config.ambient_rank + image->size();
    } else if (args.theorem == "5.5") {
      built = with_fiber_rank_components(*fiber, args.rank, c, p, args.dim,
                                         args.big_n);
      expect_rank = args.rank;
      expect_size = args.big_n + 1;
    } else if (args.theorem == "hypersurface") {
      IntVec coeffs;
      std::istringstream cs(args.coeffs);
      std::string tok;
      while (std::getline(cs, tok, ','))
        if (!tok.empty()) coeffs.emplace_back(tok);
      built = birational_hypersurface(args.dim, coeffs, p);
    } else if (args.theorem == "codim2") {
      built = birational_codim2(args.dim, p);
    } else {
      throw input_error("unknown generator: " + args.theorem);
    }

    auto checks = verify_construction(built, fiber, image, c, expect_rank,
                                      expect_size, args.threads);
    bool all_pass = true;
    for (const auto& ch : checks) all_pass = all_pass && ch.pass;

    ordered_json j = construction_report_json(built);
    ordered_json ver = ordered_json::array();
    for (const auto& ch : checks)
      ver.push_back({{"claim", ch.claim}, {"pass", ch.pass}});
    j["verification"] = ver;
    j["verified"] = all_pass;

    if (args.out_path) {
      std::ofstream f(*args.out_path);
      if (!f) throw input_error("cannot write output file: " + *args.out_path);
      ordered_json cfg;
      cfg["points"] = json_points(built.config.points);
      cfg["characteristic"] = json_int(built.config.characteristic.p);
      f << dump_report(cfg);
    }
    if (args.text) {
      out << "generator: " << built.generator << "\npoints: ";
      for (const auto& pt : built.config.points) {
        out << "(";
        for (std::size_t i = 0; i < pt.size(); ++i)
          out << (i ? "," : "") << pt[i].get_str();
        out << ") ";
      }
      out << "\nverified: " << (all_pass ? "yes" : "no") << "\n";
    } else {
      out << dump_report(j);
    }
    return all_pass ? kExitOk : kExitFalse;
  });
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&]() {
    SweepOptions opts;
    opts.samples = args.samples;
    opts.seed = args.seed;
    opts.characteristics.clear();
    std::istringstream cs(args.characteristics);
    std::string tok;
    while (std::getline(cs, tok, ',')) {
      if (tok.empty()) continue;
      Int p;
      try {
        p = Int(tok);
      } catch (const std::exception&) {
        throw input_error("malformed characteristic list entry: " + tok);
      }
      Characteristic::checked(p);
      opts.characteristics.push_back(p);
    }
    if (opts.characteristics.empty())
      throw input_error("empty characteristic list");
    SweepSummary summary = run_verification_sweep(opts);
    if (args.text)
      out << "configurations: " << summary.configs
          << "\npoints: " << summary.points
          << "\ndisagreements: " << summary.disagreements << "\n";
    else
      out << dump_report(sweep_report_json(opts, summary));
    return summary.disagreements == 0 ? kExitOk : kExitFalse;
  });
}

}  // namespace gausstoric::cli
