#include <CLI11.hpp>

#include <iostream>

#include "gausstoric/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = gausstoric::cli;
  CLI::App app{
      "gausstoric: exact combinatorial analysis of Gauss maps of "
      "projectively embedded toric varieties"};
  app.require_subcommand(1);
  unsigned threads = cli::threads_from_env();

  cli::AnalyzeArgs analyze_args;
  analyze_args.threads = threads;
  auto* analyze = app.add_subcommand(
      "analyze", "Analyze the Gauss map of a point configuration");
  analyze->add_option("input", analyze_args.input,
                      "points file (JSON or text), '-' for stdin, or inline JSON");
  analyze->add_option("--char", analyze_args.characteristic,
                      "field characteristic (overrides the input file)");
  analyze->add_option("--mode", analyze_args.mode, "full or fast")
      ->check(CLI::IsMember({"full", "fast"}));
  analyze->add_flag("--text", analyze_args.text, "human-readable output");
  analyze->add_flag("--lenient", analyze_args.lenient,
                    "drop duplicate points with a warning");
  analyze->add_option("--witness-limit", analyze_args.witness_limit,
                      "cap on stored spanning-subset witnesses");

  cli::DevelopableArgs dev_args;
  dev_args.threads = threads;
  auto* dev = app.add_subcommand(
      "developable", "Test the developability criterion for a projection");
  dev->add_option("input", dev_args.input, "points file or inline JSON");
  dev->add_option("--proj", dev_args.projection,
                  "projection matrix rows as JSON, e.g. [[0],[1]]")
      ->required();
  dev->add_option("--char", dev_args.characteristic, "field characteristic");
  dev->add_flag("--text", dev_args.text, "human-readable output");

  cli::DecomposeArgs dec_args;
  dec_args.threads = threads;
  auto* dec = app.add_subcommand(
      "decompose", "Cayley decomposition and join report (separable case)");
  dec->add_option("input", dec_args.input, "points file or inline JSON");
  dec->add_option("--char", dec_args.characteristic, "field characteristic");
  dec->add_flag("--text", dec_args.text, "human-readable output");

  cli::ConstructArgs con_args;
  con_args.threads = threads;
  auto* con = app.add_subcommand(
      "construct", "Generate configurations with prescribed Gauss-map data");
  con->add_option("--theorem", con_args.theorem,
                  "generator: 5.1 (fiber+image), 5.5 (fiber+rank+components), "
                  "hypersurface, codim2")
      ->required()
      ->check(CLI::IsMember({"5.1", "5.5", "hypersurface", "codim2"}));
  con->add_option("--fiber", con_args.fiber, "fiber configuration file");
  con->add_option("--image", con_args.image, "image configuration file");
  con->add_option("--char", con_args.characteristic, "field characteristic");
  con->add_option("-c,--components", con_args.components,
                  "number of fiber components");
  con->add_option("-r,--rank", con_args.rank, "prescribed rank (5.5)");
  con->add_option("-n,--dim", con_args.dim,
                  "ambient dimension (5.5, hypersurface, codim2)");
  con->add_option("-N,--points-minus-one", con_args.big_n,
                  "#A - 1 of the output (5.5)");
  con->add_option("--coeffs", con_args.coeffs,
                  "comma-separated coefficients (hypersurface)");
  con->add_option("--out", con_args.out_path,
                  "also write the configuration to this file");
  con->add_flag("--text", con_args.text, "human-readable output");

  cli::VerifyArgs ver_args;
  auto* ver = app.add_subcommand(
      "verify", "Random sweep: tangent-frame minors vs. the monomial formula");
  ver->add_option("--samples", ver_args.samples,
                  "configurations per characteristic");
  ver->add_option("--seed", ver_args.seed, "RNG seed");
  ver->add_option("--char", ver_args.characteristics,
                  "comma-separated characteristics");
  ver->add_flag("--text", ver_args.text, "human-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? cli::kExitInputError : cli::kExitOk;
  }

  try {
    if (*analyze) return cli::cmd_analyze(analyze_args, std::cout, std::cerr);
    if (*dev) return cli::cmd_developable(dev_args, std::cout, std::cerr);
    if (*dec) return cli::cmd_decompose(dec_args, std::cout, std::cerr);
    if (*con) return cli::cmd_construct(con_args, std::cout, std::cerr);
    if (*ver) return cli::cmd_verify(ver_args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cout << gausstoric::dump_report(
        gausstoric::error_json("internal", e.what()));
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return cli::kExitInputError;
}
