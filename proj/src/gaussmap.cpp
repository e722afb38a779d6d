#include "gausstoric/gaussmap.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <set>
#include <stdexcept>

namespace gausstoric {

namespace {

// Incremental Gaussian elimination over k used to prune the subset walk.
// Rows are kept pivot-normalized; push/pop follows the DFS.
class AffineIndependenceState {
 public:
  AffineIndependenceState(std::size_t dim, Int p)
      : dim_(dim), p_(std::move(p)) {}

  bool push_difference(const IntVec& v) {
    if (p_ > 0) {
      IntVec w(dim_);
      for (std::size_t j = 0; j < dim_; ++j) w[j] = mod_positive(v[j], p_);
      for (const auto& row : mod_rows_) {
        if (w[row.pivot] == 0) continue;
        Int f = w[row.pivot];
        for (std::size_t j = row.pivot; j < dim_; ++j)
          w[j] = mod_positive(w[j] - f * row.entries[j], p_);
      }
      std::size_t piv = 0;
      while (piv < dim_ && w[piv] == 0) ++piv;
      if (piv == dim_) return false;
      Int inv;
      mpz_invert(inv.get_mpz_t(), w[piv].get_mpz_t(), p_.get_mpz_t());
      for (std::size_t j = piv; j < dim_; ++j)
        w[j] = mod_positive(w[j] * inv, p_);
      mod_rows_.push_back({std::move(w), piv});
      return true;
    }
    std::vector<Rat> w(dim_);
    for (std::size_t j = 0; j < dim_; ++j) w[j] = Rat(v[j]);
    for (const auto& row : rat_rows_) {
      if (w[row.pivot] == 0) continue;
      Rat f = w[row.pivot];
      for (std::size_t j = row.pivot; j < dim_; ++j)
        w[j] -= f * row.entries[j];
    }
    std::size_t piv = 0;
    while (piv < dim_ && w[piv] == 0) ++piv;
    if (piv == dim_) return false;
    Rat inv = 1 / w[piv];
    for (std::size_t j = piv; j < dim_; ++j) w[j] *= inv;
    rat_rows_.push_back({std::move(w), piv});
    return true;
  }

  void pop() {
    if (p_ > 0)
      mod_rows_.pop_back();
    else
      rat_rows_.pop_back();
  }

 private:
  struct ModRow {
    IntVec entries;
    std::size_t pivot;
  };
  struct RatRow {
    std::vector<Rat> entries;
    std::size_t pivot;
  };
  std::size_t dim_;
  Int p_;
  std::vector<ModRow> mod_rows_;
  std::vector<RatRow> rat_rows_;
};

// Running Hermite form of the subgroup generated so far; drives the
// invariants-only early exit.
class IncrementalLattice {
 public:
  explicit IncrementalLattice(std::size_t n) : n_(n), basis_(0, n) {}

  void add(const IntVec& g) {
    if (full_ || lattice_contains(current(), g)) return;
    IntMat one(1, n_);
    one.set_row(0, g);
    Lattice l = hermite_basis(IntMat::stacked(basis_, one));
    basis_ = l.basis;
    full_ = basis_ == IntMat::identity(n_);
  }

  bool full() const { return n_ == 0 || full_; }

 private:
  Lattice current() const { return Lattice{n_, basis_}; }
  std::size_t n_;
  IntMat basis_;
  bool full_ = false;
};

struct ChunkResult {
  std::set<IntVec> sums;
  std::vector<Witness> witnesses;
  Int count = 0;
};

// All spanning (n+1)-subsets whose smallest index is `first`.
ChunkResult enumerate_chunk(const PointConfiguration& config,
                            std::size_t first,
                            const std::atomic<bool>* cancel) {
  ChunkResult out;
  std::size_t n = config.ambient_rank;
  std::size_t total = config.size();
  AffineIndependenceState state(n, config.characteristic.p);
  std::vector<std::size_t> chosen{first};
  IntVec sum = config.points[first];

  auto record = [&]() {
    Int mu(0);
    IntMat bordered(n + 1, n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
      bordered.at(r, 0) = 1;
      for (std::size_t j = 0; j < n; ++j)
        bordered.at(r, j + 1) = config.points[chosen[r]][j];
    }
    mu = bordered.det();
    out.sums.insert(sum);
    out.witnesses.push_back({chosen, mu});
    out.count += 1;
  };

  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (cancel && cancel->load(std::memory_order_relaxed)) return;
    if (chosen.size() == n + 1) {
      record();
      return;
    }
    std::size_t needed = n + 1 - chosen.size();
    for (std::size_t i = next; i + needed <= total; ++i) {
      if (!state.push_difference(
              vec_sub(config.points[i], config.points[first])))
        continue;
      chosen.push_back(i);
      for (std::size_t j = 0; j < n; ++j) sum[j] += config.points[i][j];
      self(self, i + 1);
      for (std::size_t j = 0; j < n; ++j) sum[j] -= config.points[i][j];
      chosen.pop_back();
      state.pop();
      if (cancel && cancel->load(std::memory_order_relaxed)) return;
    }
  };
  rec(rec, first + 1);
  return out;
}

}  // namespace

SpanningSumData enumerate_B(const PointConfiguration& config,
                            const EnumerateOptions& opts) {
  std::size_t n = config.ambient_rank;
  if (affine_rank_over_Z(config.points) != n)
    throw precondition_error(
        "enumeration requires a configuration spanning its ambient lattice");

  SpanningSumData out;
  if (config.size() < n + 1) return out;

  std::set<IntVec> sums;
  IncrementalLattice running(n);
  std::optional<IntVec> base;
  bool stopped = false;

  auto merge = [&](ChunkResult&& chunk) {
    for (auto& w : chunk.witnesses) {
      if (out.witnesses.size() <
          static_cast<std::size_t>(opts.witness_limit))
        out.witnesses.push_back(std::move(w));
      else
        out.witnesses_truncated = true;
    }
    out.witness_count += chunk.count;
    for (const auto& s : chunk.sums) {
      sums.insert(s);
      if (opts.mode == AnalysisMode::invariants_only) {
        if (!base) base = s;
        running.add(vec_sub(s, *base));
      }
    }
    if (opts.mode == AnalysisMode::invariants_only && running.full() &&
        !sums.empty())
      stopped = true;
  };

  std::size_t last_first = config.size() - (n + 1);
  if (opts.threads <= 1) {
    for (std::size_t first = 0; first <= last_first && !stopped; ++first)
      merge(enumerate_chunk(config, first, nullptr));
  } else {
    std::atomic<bool> cancel{false};
    std::vector<std::future<ChunkResult>> futures;
    futures.reserve(last_first + 1);
    for (std::size_t first = 0; first <= last_first; ++first)
      futures.push_back(std::async(std::launch::async, enumerate_chunk,
                                   std::cref(config), first, &cancel));
    for (std::size_t first = 0; first <= last_first; ++first) {
      ChunkResult chunk = futures[first].get();
      if (stopped) continue;  // drain remaining futures deterministically
      merge(std::move(chunk));
      if (stopped) cancel.store(true, std::memory_order_relaxed);
    }
  }

  // A cancelled tail means the reported sums are a prefix of B only.
  out.possibly_partial = stopped;
  out.sums.assign(sums.begin(), sums.end());
  return out;
}

namespace {

PointConfiguration deduplicated_images(const PointConfiguration& config,
                                       const IntMat& projection) {
  PointConfiguration out;
  out.ambient_rank = projection.cols();
  out.characteristic = config.characteristic;
  std::set<IntVec> seen;
  for (const auto& p : config.points) {
    IntVec img = row_times(p, projection);
    if (seen.insert(img).second) out.points.push_back(img);
  }
  return out;
}

}  // namespace

GaussStructure analyze(const std::vector<IntVec>& raw_points, const Int& p,
                       const AnalyzeOptions& opts) {
  ValidatedConfiguration v = validate(raw_points, p, opts.dedup);
  GaussStructure s = analyze(v.config, opts);
  s.warnings.insert(s.warnings.begin(), v.warnings.begin(), v.warnings.end());
  return s;
}

GaussStructure analyze(const PointConfiguration& config,
                       const AnalyzeOptions& opts) {
  GaussStructure s;
  s.original = config;
  s.mode = opts.mode;
  s.normalization = normalize(config);
  s.input = s.normalization.normalized;
  std::size_t n = s.input.ambient_rank;

  EnumerateOptions eopts{opts.mode, opts.witness_limit, opts.threads};
  s.b = enumerate_B(s.input, eopts);

  if (s.b.sums.empty()) {
    // Unreachable for spanning configurations, kept as a stated convention.
    s.lattice = Lattice{n, IntMat(0, n)};
  } else if (s.b.possibly_partial) {
    // Early exit fires only once <B-B> is the full lattice.
    s.lattice = Lattice{n, IntMat::identity(n)};
  } else {
    IntMat diffs(s.b.sums.size() - 1, n);
    for (std::size_t i = 1; i < s.b.sums.size(); ++i)
      diffs.set_row(i - 1, vec_sub(s.b.sums[i], s.b.sums[0]));
    s.lattice = hermite_basis(diffs);
  }

  s.saturation = saturate(s.lattice);
  auto [a, b, sexp] =
      index_and_p_split(s.lattice, s.saturation, config.characteristic.p);
  s.projection = quotient_projection(s.saturation);
  s.fiber_config = deduplicated_images(s.input, s.projection.matrix);
  if (opts.mode == AnalysisMode::full && !s.b.sums.empty()) {
    PointConfiguration bc;
    bc.ambient_rank = n;
    bc.points = s.b.sums;
    bc.characteristic = config.characteristic;
    s.image_config = normalize(bc).normalized;
  }

  GaussInvariants& inv = s.invariants;
  inv.defect = n - s.lattice.rank();
  inv.rank = rank_over_field(s.lattice.basis, config.characteristic.p);
  inv.deg_g2 = a;
  inv.sep_deg = b;
  inv.insep_deg = a / b;
  inv.component_count = b;
  inv.separable = inv.rank == s.lattice.rank();
  inv.degenerate = inv.defect > 0;
  inv.birational = a == 1 && inv.defect == 0 && inv.separable;
  return s;
}

const PointConfiguration& fiber_configuration(const GaussStructure& s) {
  return s.fiber_config;
}

const PointConfiguration& image_configuration(const GaussStructure& s) {
  if (!s.image_config)
    throw precondition_error("image requires full enumeration");
  return *s.image_config;
}

Int affine_determinant(const PointConfiguration& config,
                       const std::vector<std::size_t>& tuple) {
  std::size_t n = config.ambient_rank;
  if (tuple.size() != n + 1)
    throw std::invalid_argument("tuple must have n+1 indices");
  IntMat bordered(n + 1, n + 1);
  for (std::size_t r = 0; r <= n; ++r) {
    bordered.at(r, 0) = 1;
    for (std::size_t j = 0; j < n; ++j)
      bordered.at(r, j + 1) = config.points[tuple[r]][j];
  }
  return bordered.det();
}

std::vector<PluckerTerm> plucker_support(const PointConfiguration& config) {
  EnumerateOptions opts;
  opts.mode = AnalysisMode::full;
  opts.witness_limit = static_cast<std::size_t>(-1);
  SpanningSumData data = enumerate_B(config, opts);
  std::vector<PluckerTerm> out;
  out.reserve(data.witnesses.size());
  const Int& p = config.characteristic.p;
  for (const auto& w : data.witnesses) {
    PluckerTerm t;
    t.tuple = w.tuple;
    t.mu = w.mu;
    t.mu_reduced = p > 0 ? mod_positive(w.mu, p) : w.mu;
    IntVec sum(config.ambient_rank);
    for (std::size_t idx : w.tuple) sum = vec_add(sum, config.points[idx]);
    t.sum = sum;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace gausstoric
