#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gausstoric/cli.hpp"
#include "gausstoric/report.hpp"

namespace py = pybind11;
using namespace gausstoric;

namespace {

Int to_int(py::handle h) { return Int(py::str(h).cast<std::string>()); }

py::object to_py_int(const Int& z) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

IntVec to_vec(py::handle seq) {
  IntVec out;
  for (py::handle x : py::iterable(seq)) out.push_back(to_int(x));
  return out;
}

std::vector<IntVec> to_points(py::handle seq) {
  std::vector<IntVec> out;
  for (py::handle row : py::iterable(seq)) out.push_back(to_vec(row));
  return out;
}

IntMat to_matrix(py::handle seq, std::size_t cols_if_empty = 0) {
  std::vector<IntVec> rows = to_points(seq);
  std::size_t cols = rows.empty() ? cols_if_empty : rows[0].size();
  return IntMat::from_rows(rows, cols);
}

py::list from_matrix(const IntMat& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py_int(m.at(i, j)));
    rows.append(row);
  }
  return rows;
}

py::object json_to_py(const ordered_json& j) {
  switch (j.type()) {
    case ordered_json::value_t::null:
      return py::none();
    case ordered_json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case ordered_json::value_t::string:
      return py::str(j.get<std::string>());
    case ordered_json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case ordered_json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case ordered_json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(json_to_py(x));
      return out;
    }
    case ordered_json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

AnalyzeOptions make_options(const std::string& mode, bool lenient,
                            unsigned threads) {
  AnalyzeOptions opts;
  if (mode == "full")
    opts.mode = AnalysisMode::full;
  else if (mode == "fast")
    opts.mode = AnalysisMode::invariants_only;
  else
    throw input_error("mode must be full or fast");
  opts.dedup = lenient ? DedupMode::lenient : DedupMode::strict;
  opts.threads = threads;
  return opts;
}

ordered_json analyze_to_json(py::handle points, py::handle characteristic,
                             const std::string& mode, bool lenient,
                             unsigned threads) {
  GaussStructure s = analyze(to_points(points), to_int(characteristic),
                             make_options(mode, lenient, threads));
  return emit_analysis_report(make_analysis_report(s));
}

ordered_json construction_with_checks(const ConstructionResult& built) {
  ordered_json j = construction_report_json(built);
  GaussStructure s = analyze(built.config);
  j["analysis"] = emit_analysis_report(make_analysis_report(s));
  return j;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact combinatorial analysis of Gauss maps of projectively embedded "
      "toric varieties";

  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<precondition_error>(m, "PreconditionError",
                                             PyExc_ValueError);

  m.def(
      "analyze",
      [](py::handle points, py::handle characteristic, const std::string& mode,
         bool lenient, unsigned threads) {
        return json_to_py(
            analyze_to_json(points, characteristic, mode, lenient, threads));
      },
      py::arg("points"), py::arg("characteristic") = 0,
      py::arg("mode") = "full", py::arg("lenient") = false,
      py::arg("threads") = 1,
      "Full Gauss-map analysis; returns the report as a dict (integers are "
      "decimal strings).");

  m.def(
      "analyze_json",
      [](py::handle points, py::handle characteristic, const std::string& mode,
         bool lenient, unsigned threads) {
        return dump_report(
            analyze_to_json(points, characteristic, mode, lenient, threads));
      },
      py::arg("points"), py::arg("characteristic") = 0,
      py::arg("mode") = "full", py::arg("lenient") = false,
      py::arg("threads") = 1, "Analysis report serialized as JSON.");

  m.def(
      "developable",
      [](py::handle points, py::handle projection, py::handle characteristic) {
        PointConfiguration config =
            validate(to_points(points), to_int(characteristic)).config;
        IntMat pi = to_matrix(projection, config.ambient_rank);
        GaussStructure s = analyze(config);
        DevelopabilityReport rep = developable(s.input, pi, &s);
        return json_to_py(developability_report_json(s.input, rep));
      },
      py::arg("points"), py::arg("projection"), py::arg("characteristic") = 0,
      "Developability criterion for the covering family cut out by a "
      "projection.");

  m.def(
      "decompose",
      [](py::handle points, py::handle characteristic) {
        GaussStructure s = analyze(to_points(points), to_int(characteristic));
        CayleyDecomposition d = cayley_decompose(s);
        JoinReport jr = join_report(d);
        return json_to_py(decomposition_report_json(s, d, jr));
      },
      py::arg("points"), py::arg("characteristic") = 0,
      "Cayley decomposition and join report of a separable analysis.");

  m.def(
      "construct_with_fiber_and_image",
      [](py::handle fiber, py::handle image, py::handle c, py::handle p) {
        Int pp = to_int(p);
        PointConfiguration f = validate(to_points(fiber), pp).config;
        PointConfiguration g = validate(to_points(image), pp).config;
        return json_to_py(
            construction_with_checks(with_fiber_and_image(f, g, to_int(c), pp)));
      },
      py::arg("fiber"), py::arg("image"), py::arg("c"), py::arg("p"));

  m.def(
      "construct_with_fiber_rank_components",
      [](py::handle fiber, unsigned long r, py::handle c, py::handle p,
         std::size_t n, std::size_t big_n) {
        Int pp = to_int(p);
        PointConfiguration f = validate(to_points(fiber), pp).config;
        return json_to_py(construction_with_checks(
            with_fiber_rank_components(f, r, to_int(c), pp, n, big_n)));
      },
      py::arg("fiber"), py::arg("r"), py::arg("c"), py::arg("p"), py::arg("n"),
      py::arg("N"));

  m.def(
      "construct_birational_hypersurface",
      [](std::size_t n, py::handle coeffs, py::handle p) {
        return json_to_py(construction_with_checks(
            birational_hypersurface(n, to_vec(coeffs), to_int(p))));
      },
      py::arg("n"), py::arg("coefficients"), py::arg("p"));

  m.def(
      "construct_birational_codim2",
      [](std::size_t n, py::handle p) {
        return json_to_py(
            construction_with_checks(birational_codim2(n, to_int(p))));
      },
      py::arg("n"), py::arg("p"));

  m.def(
      "verify_sweep",
      [](std::size_t samples, std::uint64_t seed, py::handle characteristics) {
        SweepOptions opts;
        opts.samples = samples;
        opts.seed = seed;
        opts.characteristics.clear();
        for (py::handle c : py::iterable(characteristics)) {
          Int p = to_int(c);
          Characteristic::checked(p);
          opts.characteristics.push_back(p);
        }
        SweepSummary s = run_verification_sweep(opts);
        return json_to_py(sweep_report_json(opts, s));
      },
      py::arg("samples") = 100, py::arg("seed") = 7,
      py::arg("characteristics") = py::make_tuple(0, 2, 3, 5),
      "Random corpus check of the Plucker minors against the monomial "
      "formula.");

  m.def(
      "fiber_count",
      [](py::handle basis_rows, py::handle p, unsigned e, std::size_t ambient) {
        IntMat rows = to_matrix(basis_rows, ambient);
        Lattice l = hermite_basis(rows);
        return to_py_int(fiber_count_oracle(l, to_int(p), e));
      },
      py::arg("basis_rows"), py::arg("p"), py::arg("e"), py::arg("ambient"),
      "Brute-force torus kernel count over F_{p^e}.");

  m.def(
      "hermite_basis",
      [](py::handle rows, std::size_t ambient) {
        return from_matrix(hermite_basis(to_matrix(rows, ambient)).basis);
      },
      py::arg("rows"), py::arg("ambient") = 0,
      "Canonical Hermite basis of the row span.");

  m.def(
      "smith",
      [](py::handle rows) {
        SmithDecomposition sd = smith(to_matrix(rows));
        py::dict out;
        out["left"] = from_matrix(sd.left);
        py::list div;
        for (const auto& d : sd.divisors) div.append(to_py_int(d));
        out["divisors"] = div;
        out["right"] = from_matrix(sd.right);
        return out;
      },
      py::arg("rows"), "Smith decomposition left * rows * right = diag.");

  m.def(
      "saturate",
      [](py::handle rows, std::size_t ambient) {
        return from_matrix(saturate(hermite_basis(to_matrix(rows, ambient))).basis);
      },
      py::arg("rows"), py::arg("ambient") = 0,
      "Basis of the saturation of the row span.");

  m.def(
      "rank_over_field",
      [](py::handle rows, py::handle p) {
        return rank_over_field(to_matrix(rows), to_int(p));
      },
      py::arg("rows"), py::arg("p"),
      "Rank over Q (p = 0) or over F_p of the row span.");

  m.def(
      "affinely_isomorphic",
      [](py::handle a, py::handle b) {
        PointConfiguration ca = validate(to_points(a), Int(0)).config;
        PointConfiguration cb = validate(to_points(b), Int(0)).config;
        return affinely_isomorphic(ca, cb).has_value();
      },
      py::arg("a"), py::arg("b"),
      "Whether two configurations agree up to an affine lattice isomorphism.");

  m.attr("__version__") = "0.1.0";
}
