#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gausstoric/configuration.hpp"

namespace gausstoric {

enum class AnalysisMode { full, invariants_only };

struct Witness {
  std::vector<std::size_t> tuple;  // i_0 < ... < i_n
  Int mu;                          // exact affine determinant, nonzero in k
};

/// The set B of sums over (n+1)-subsets that affinely span over k, plus the
/// witness bookkeeping.
struct SpanningSumData {
  std::vector<IntVec> sums;  // distinct, sorted lexicographically
  Int witness_count = 0;
  bool possibly_partial = false;    // invariants-only runs may stop early
  bool witnesses_truncated = false;
  std::vector<Witness> witnesses;
};

struct EnumerateOptions {
  AnalysisMode mode = AnalysisMode::full;
  std::size_t witness_limit = 100000;
  unsigned threads = 1;
};

/// Enumerates B for a configuration that affinely spans Z^n.  Subsets are
/// walked in lexicographic order with incremental affine-rank pruning over
/// k; a point that does not enlarge the span of the partial subset is
/// skipped outright.  In invariants-only mode enumeration stops (at a chunk
/// boundary, so deterministically) once <B-B> = Z^n, which pins every
/// downstream invariant.
SpanningSumData enumerate_B(const PointConfiguration& config,
                            const EnumerateOptions& opts = {});

struct GaussInvariants {
  std::size_t defect = 0;    // n - rank<B-B>
  std::size_t rank = 0;      // dim over k of the span of B-B
  Int deg_g2 = 1;            // [sat : <B-B>]
  Int sep_deg = 1;
  Int insep_deg = 1;
  Int component_count = 1;   // = sep_deg
  bool separable = false;
  bool birational = false;
  bool degenerate = false;
};

/// The full analysis record of the Gauss map of X_A.
struct GaussStructure {
  PointConfiguration original;
  AffineNormalization normalization;
  PointConfiguration input;  // normalized configuration the analysis ran on
  SpanningSumData b;
  Lattice lattice;     // <B - B>
  Lattice saturation;  // <B - B>_R intersect Z^n
  QuotientProjection projection;
  PointConfiguration fiber_config;  // pi(A), deduplicated
  std::optional<PointConfiguration> image_config;  // normalized B, full mode
  GaussInvariants invariants;
  AnalysisMode mode = AnalysisMode::full;
  std::vector<std::string> warnings;
};

struct AnalyzeOptions {
  AnalysisMode mode = AnalysisMode::full;
  DedupMode dedup = DedupMode::strict;
  std::size_t witness_limit = 100000;
  unsigned threads = 1;
};

GaussStructure analyze(const std::vector<IntVec>& raw_points, const Int& p,
                       const AnalyzeOptions& opts = {});
GaussStructure analyze(const PointConfiguration& config,
                       const AnalyzeOptions& opts = {});

const PointConfiguration& fiber_configuration(const GaussStructure& s);

/// Normalized B; requires a full enumeration.
const PointConfiguration& image_configuration(const GaussStructure& s);

struct PluckerTerm {
  std::vector<std::size_t> tuple;
  Int mu;          // exact integer determinant
  Int mu_reduced;  // image in k: mod p for p > 0, the integer itself at p = 0
  IntVec sum;
};

/// Exponent/coefficient table of the Plucker monomial map: every spanning
/// tuple with its coefficient.
std::vector<PluckerTerm> plucker_support(const PointConfiguration& config);

/// det [1 ... 1; u_{i_0} ... u_{i_n}] for the given index tuple.
Int affine_determinant(const PointConfiguration& config,
                       const std::vector<std::size_t>& tuple);

}  // namespace gausstoric
