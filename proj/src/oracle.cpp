#include "gausstoric/oracle.hpp"

#include <set>
#include <sstream>

namespace gausstoric {

std::vector<std::vector<std::size_t>> index_tuples(std::size_t total,
                                                   std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  if (size > total) return out;
  std::vector<std::size_t> cur(size);
  for (std::size_t i = 0; i < size; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    // advance to the next combination
    std::size_t i = size;
    while (i > 0) {
      --i;
      if (cur[i] + (size - i) < total) {
        ++cur[i];
        for (std::size_t j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
    if (size == 0) return out;
  }
}

Int fiber_count_oracle(const Lattice& l, const Int& p, unsigned e) {
  FiniteField f(p, e);
  std::size_t n = l.ambient_rank;
  Int torus_size = pow_int(Int(f.q() - 1), static_cast<unsigned long>(n));
  if (torus_size > 1000000) throw input_error("budget exceeded");

  Int group_order(f.q() - 1);
  // z^(q-1) = 1, so exponents act through their residues
  IntMat reduced(l.rank(), n);
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      reduced.at(i, j) = mod_positive(l.basis.at(i, j), group_order);

  std::vector<FiniteField::Elt> units = f.nonzero_elements();
  std::vector<std::size_t> odo(n, 0);
  Int count = 0;
  while (true) {
    bool in_kernel = true;
    for (std::size_t i = 0; i < l.rank() && in_kernel; ++i) {
      FiniteField::Elt acc = f.one();
      for (std::size_t j = 0; j < n; ++j)
        acc = f.mul(acc, f.pow(units[odo[j]], reduced.at(i, j)));
      in_kernel = acc == f.one();
    }
    if (in_kernel) count += 1;
    // advance odometer
    std::size_t pos = 0;
    while (pos < n) {
      if (++odo[pos] < units.size()) break;
      odo[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
    if (n == 0) break;
  }
  return count;
}

PointConfiguration random_configuration(Rng& rng, const Int& p,
                                        std::size_t max_dim,
                                        std::size_t max_points,
                                        long coordinate_bound) {
  while (true) {
    std::size_t n = static_cast<std::size_t>(rng.below(1, static_cast<long>(max_dim)));
    std::size_t want = static_cast<std::size_t>(
        rng.below(static_cast<long>(n) + 1, static_cast<long>(max_points)));
    std::set<IntVec> pts;
    std::size_t attempts = 0;
    while (pts.size() < want && attempts < 200) {
      IntVec v(n);
      for (std::size_t j = 0; j < n; ++j)
        v[j] = Int(rng.below(-coordinate_bound, coordinate_bound));
      pts.insert(v);
      ++attempts;
    }
    if (pts.size() < std::max<std::size_t>(want, 2)) continue;
    std::vector<IntVec> points(pts.begin(), pts.end());
    PointConfiguration cfg = validate(points, p).config;
    // Work with the normalized configuration so it spans its lattice.
    return normalize(cfg).normalized;
  }
}

namespace {

template <class F>
std::size_t check_config_at_points(const F& field,
                                   const PointConfiguration& cfg,
                                   const std::vector<FieldVec<F>>& points,
                                   std::vector<std::string>& failures) {
  std::size_t bad = 0;
  std::set<std::vector<std::size_t>> spanning;
  for (const auto& term : plucker_support(cfg)) spanning.insert(term.tuple);
  for (const auto& z : points) {
    auto sample = gamma_matrix(field, cfg, z);
    auto formula = plucker_from_monomials(field, cfg, z);
    std::vector<typename F::Elt> lhs, rhs;
    std::set<std::vector<std::size_t>> nonzero_minors;
    for (std::size_t i = 0; i < sample.minors.size(); ++i) {
      lhs.push_back(sample.minors[i].second);
      rhs.push_back(formula[i].second);
      if (!field.is_zero(sample.minors[i].second))
        nonzero_minors.insert(sample.minors[i].first);
    }
    bool ok = projectively_equal(field, lhs, rhs) && nonzero_minors == spanning;
    if (!ok) {
      ++bad;
      std::ostringstream os;
      os << "disagreement: char " << cfg.characteristic.p.get_str()
         << ", points ";
      for (const auto& pt : cfg.points) {
        os << "(";
        for (std::size_t j = 0; j < pt.size(); ++j)
          os << (j ? "," : "") << pt[j].get_str();
        os << ")";
      }
      failures.push_back(os.str());
    }
  }
  return bad;
}

}  // namespace

SweepSummary run_verification_sweep(const SweepOptions& opts) {
  SweepSummary summary;
  Rng rng(opts.seed);
  for (const Int& p : opts.characteristics) {
    for (std::size_t s = 0; s < opts.samples; ++s) {
      PointConfiguration cfg = random_configuration(
          rng, p, opts.max_dim, opts.max_points, opts.coordinate_bound);
      ++summary.configs;
      std::size_t n = cfg.ambient_rank;
      if (p == 0) {
        RationalField field;
        std::vector<FieldVec<RationalField>> pts;
        for (std::size_t k = 0; k < opts.points_per_config; ++k) {
          FieldVec<RationalField> z(n);
          for (std::size_t j = 0; j < n; ++j) {
            long num = rng.below(1, 9) * (rng.chance(1, 2) ? 1 : -1);
            long den = rng.below(1, 9);
            z[j] = Rat(Int(num), Int(den));
            z[j].canonicalize();
          }
          pts.push_back(z);
        }
        summary.points += pts.size();
        summary.disagreements +=
            check_config_at_points(field, cfg, pts, summary.failures);
      } else {
        FiniteField field(p, 2);  // q = p^2 keeps every sweep field <= 25
        auto units = field.nonzero_elements();
        std::vector<FieldVec<FiniteField>> pts;
        for (std::size_t k = 0; k < opts.points_per_config; ++k) {
          FieldVec<FiniteField> z(n);
          for (std::size_t j = 0; j < n; ++j)
            z[j] = units[static_cast<std::size_t>(
                rng.below(0, static_cast<long>(units.size()) - 1))];
          pts.push_back(z);
        }
        summary.points += pts.size();
        summary.disagreements +=
            check_config_at_points(field, cfg, pts, summary.failures);
      }
    }
  }
  return summary;
}

}  // namespace gausstoric
