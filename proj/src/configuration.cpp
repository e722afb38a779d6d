#include "gausstoric/configuration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gausstoric {

Characteristic Characteristic::checked(const Int& p) {
  if (p == 0) return Characteristic{0};
  if (!is_prime(p)) throw input_error("characteristic must be 0 or prime");
  return Characteristic{p};
}

ValidatedConfiguration validate(const std::vector<IntVec>& points,
                                const Int& p, DedupMode mode) {
  ValidatedConfiguration out;
  out.config.characteristic = Characteristic::checked(p);
  if (points.empty()) throw input_error("empty point configuration");
  out.config.ambient_rank = points[0].size();
  std::set<IntVec> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != out.config.ambient_rank)
      throw input_error("points have inconsistent dimension");
    if (!seen.insert(points[i]).second) {
      if (mode == DedupMode::strict) {
        std::ostringstream os;
        os << "duplicate point at index " << i;
        throw input_error(os.str());
      }
      std::ostringstream os;
      os << "dropped duplicate point at index " << i;
      out.warnings.push_back(os.str());
      continue;
    }
    out.config.points.push_back(points[i]);
  }
  return out;
}

IntVec AffineNormalization::to_original(const IntVec& p) const {
  return vec_add(row_times(p, change_of_basis), origin);
}

AffineNormalization normalize(const PointConfiguration& config) {
  AffineNormalization out;
  out.origin_index = 0;
  out.origin = config.points[0];
  std::size_t n = config.ambient_rank;
  IntMat diffs(config.size() - 1, n);
  for (std::size_t i = 1; i < config.size(); ++i)
    diffs.set_row(i - 1, vec_sub(config.points[i], out.origin));
  Lattice span = hermite_basis(diffs);
  out.change_of_basis = span.basis;
  out.normalized.ambient_rank = span.rank();
  out.normalized.characteristic = config.characteristic;
  for (const auto& p : config.points) {
    auto coords = solve_in_lattice(span, vec_sub(p, out.origin));
    if (!coords) throw std::logic_error("point outside its own affine span");
    out.normalized.points.push_back(*coords);
  }
  return out;
}

std::size_t affine_dim_over_k(const std::vector<IntVec>& points,
                              const Int& p) {
  if (points.empty()) throw input_error("empty point list");
  IntMat diffs(points.size() - 1, points[0].size());
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.set_row(i - 1, vec_sub(points[i], points[0]));
  return rank_over_field(diffs, p);
}

std::size_t affine_rank_over_Z(const std::vector<IntVec>& points) {
  if (points.empty()) throw input_error("empty point list");
  IntMat diffs(points.size() - 1, points[0].size());
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.set_row(i - 1, vec_sub(points[i], points[0]));
  return hermite_basis(diffs).rank();
}

std::vector<IntVec> FiberPartition::class_points(
    const PointConfiguration& config, std::size_t j) const {
  std::vector<IntVec> out;
  for (std::size_t idx : classes[j]) out.push_back(config.points[idx]);
  return out;
}

FiberPartition partition_by(const PointConfiguration& config,
                            const IntMat& pi) {
  if (pi.rows() != config.ambient_rank)
    throw input_error("projection matrix has wrong number of rows");
  std::size_t l = pi.cols();
  if (l > 0) {
    SmithDecomposition sd = smith(pi);
    bool onto = sd.divisors.size() == l;
    for (const Int& d : sd.divisors) onto = onto && d == 1;
    if (!onto) throw input_error("projection is not surjective");
  }
  FiberPartition out;
  out.projection = pi;
  std::map<IntVec, std::size_t> index_of;
  for (std::size_t i = 0; i < config.size(); ++i) {
    IntVec img = row_times(config.points[i], pi);
    auto it = index_of.find(img);
    if (it == index_of.end()) {
      index_of.emplace(img, out.class_images.size());
      out.class_images.push_back(img);
      out.classes.emplace_back();
      out.classes.back().push_back(i);
    } else {
      out.classes[it->second].push_back(i);
    }
  }
  return out;
}

PointConfiguration cayley_sum(const std::vector<PointConfiguration>& parts) {
  if (parts.empty()) throw input_error("Cayley sum of no parts");
  std::size_t base = parts[0].ambient_rank;
  Characteristic ch = parts[0].characteristic;
  for (const auto& p : parts) {
    if (p.ambient_rank != base)
      throw input_error("Cayley parts have mismatched ambient ranks");
    if (!(p.characteristic == ch))
      throw input_error("Cayley parts have mismatched characteristics");
  }
  std::size_t l = parts.size() - 1;
  PointConfiguration out;
  out.ambient_rank = base + l;
  out.characteristic = ch;
  for (std::size_t j = 0; j < parts.size(); ++j)
    for (const auto& a : parts[j].points) {
      IntVec v(base + l);
      for (std::size_t t = 0; t < base; ++t) v[t] = a[t];
      if (j > 0) v[base + j - 1] = 1;
      out.points.push_back(v);
    }
  return out;
}

namespace {

// Greedy affine basis of a normalized configuration: the origin plus m
// points whose differences are linearly independent over Q.
std::vector<std::size_t> greedy_affine_basis(const PointConfiguration& c) {
  std::size_t m = c.ambient_rank;
  std::vector<std::size_t> picked{0};
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < c.size() && picked.size() < m + 1; ++i) {
    std::vector<IntVec> trial = diffs;
    trial.push_back(vec_sub(c.points[i], c.points[0]));
    IntMat mat(trial.size(), m);
    for (std::size_t r = 0; r < trial.size(); ++r) mat.set_row(r, trial[r]);
    if (hermite_normal_form(mat).rank == trial.size()) {
      diffs = std::move(trial);
      picked.push_back(i);
    }
  }
  return picked;
}

}  // namespace

std::optional<AffineIso> affinely_isomorphic(const PointConfiguration& a,
                                             const PointConfiguration& b) {
  if (a.size() != b.size()) return std::nullopt;
  PointConfiguration an = normalize(a).normalized;
  PointConfiguration bn = normalize(b).normalized;
  if (an.ambient_rank != bn.ambient_rank) return std::nullopt;
  std::size_t m = an.ambient_rank;
  std::size_t count = an.size();

  std::set<IntVec> b_set(bn.points.begin(), bn.points.end());
  if (m == 0) return AffineIso{IntMat(0, 0), IntVec{}};

  std::vector<std::size_t> anchors = greedy_affine_basis(an);
  if (anchors.size() != m + 1) return std::nullopt;
  IntMat ds(m, m);
  for (std::size_t i = 0; i < m; ++i)
    ds.set_row(i, vec_sub(an.points[anchors[i + 1]], an.points[anchors[0]]));

  // Try every ordered (m+1)-tuple of targets for the anchor points.
  std::vector<std::size_t> idx(m + 1);
  std::vector<bool> used(count, false);
  std::optional<AffineIso> found;
  auto attempt = [&]() {
    IntMat dt(m, m);
    for (std::size_t i = 0; i < m; ++i)
      dt.set_row(i, vec_sub(bn.points[idx[i + 1]], bn.points[idx[0]]));
    // map = ds^-1 * dt, required integral and unimodular; solved column
    // by column (ds * col_c(map) = col_c(dt)).
    IntMat map(m, m);
    for (std::size_t c = 0; c < m; ++c) {
      IntVec rhs(m);
      for (std::size_t r = 0; r < m; ++r) rhs[r] = dt.at(r, c);
      auto sol = solve_left_integral(ds.transposed(), rhs);
      if (!sol) return false;
      for (std::size_t r = 0; r < m; ++r) map.at(r, c) = (*sol)[r];
    }
    Int det = map.det();
    if (det != 1 && det != -1) return false;
    IntVec shift = vec_sub(bn.points[idx[0]],
                           row_times(an.points[anchors[0]], map));
    for (const auto& p : an.points)
      if (!b_set.count(vec_add(row_times(p, map), shift))) return false;
    found = AffineIso{map, shift};
    return true;
  };
  // depth-first over ordered tuples of distinct indices
  std::vector<std::size_t> stack;
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == m + 1) return attempt();
    for (std::size_t i = 0; i < count; ++i) {
      if (used[i]) continue;
      used[i] = true;
      idx[depth] = i;
      if (self(self, depth + 1)) return true;
      used[i] = false;
    }
    return false;
  };
  if (rec(rec, 0)) return found;
  return std::nullopt;
}

}  // namespace gausstoric
