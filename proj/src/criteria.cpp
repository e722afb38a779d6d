#include "gausstoric/criteria.hpp"

#include <set>
#include <stdexcept>

namespace gausstoric {

DevelopabilityReport developable(const PointConfiguration& config,
                                 const IntMat& pi,
                                 const GaussStructure* structure) {
  std::size_t n = config.ambient_rank;
  if (affine_rank_over_Z(config.points) != n)
    throw precondition_error(
        "developability requires a configuration spanning its ambient lattice");

  FiberPartition part = partition_by(config, pi);
  DevelopabilityReport rep;
  rep.projection = pi;
  for (std::size_t j = 0; j < part.classes.size(); ++j)
    rep.lhs += Int(affine_dim_over_k(part.class_points(config, j),
                                     config.characteristic.p));
  rep.rhs = Int(n) - Int(part.classes.size() - 1);
  rep.developable = rep.lhs == rep.rhs;

  if (structure) {
    if (structure->input.points != config.points)
      throw std::invalid_argument(
          "analysis does not belong to this configuration");
    bool contained = true;
    for (std::size_t i = 0; i < structure->lattice.rank(); ++i)
      contained = contained &&
                  vec_is_zero(row_times(structure->lattice.basis.row(i), pi));
    rep.cross_check = contained;
  }
  return rep;
}

CayleyDecomposition cayley_decompose(const GaussStructure& s) {
  if (!s.invariants.separable)
    throw precondition_error(
        "Cayley decomposition requires separable Gauss map");
  std::size_t n = s.input.ambient_rank;
  std::size_t l = s.invariants.defect;

  FiberPartition part = partition_by(s.input, s.projection.matrix);
  if (part.classes.size() != l + 1)
    throw std::logic_error("separable analysis with #pi(A) != defect + 1");
  if (!vec_is_zero(part.class_images[0]))
    throw std::logic_error("normalized origin does not project to zero");

  const Lattice& ker = s.saturation;  // = ker(projection), rank n - l
  const IntMat& split = s.projection.splitting;

  CayleyDecomposition out;
  out.l = l;
  out.splitting_used = split;

  Int dim_sum = 0;
  for (std::size_t j = 0; j < part.classes.size(); ++j) {
    PointConfiguration pc;
    pc.ambient_rank = n - l;
    pc.characteristic = s.input.characteristic;
    IntVec offset = row_times(part.class_images[j], split);
    for (std::size_t idx : part.classes[j]) {
      auto coords = solve_in_lattice(ker, vec_sub(s.input.points[idx], offset));
      if (!coords)
        throw std::logic_error("class translate left the kernel lattice");
      pc.points.push_back(*coords);
    }
    dim_sum += Int(affine_dim_over_k(pc.points, s.input.characteristic.p));
    out.parts.push_back(std::move(pc));
  }
  if (dim_sum != Int(n) - Int(l))
    throw std::logic_error("per-part k-dimensions violate the criterion");

  // u |-> (coords of u - s(pi(u)) in ker, pi(u) rebased to the standard
  // basis): [ (I - P*S) * K^+ | P * W ] with W the change of basis that
  // sends the nonzero fiber images to e_1, ..., e_l.
  IntMat kplus;
  {
    SmithDecomposition sd = smith(ker.basis);
    kplus = sd.right.submatrix_cols(0, ker.rank()) * sd.left;
  }
  IntMat proj_split = s.projection.matrix * split;  // n x n
  IntMat t = IntMat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) -= proj_split.at(i, j);
  t = t * kplus;  // n x (n - l)

  IntMat images(l, l);
  for (std::size_t j = 1; j <= l; ++j)
    images.set_row(j - 1, part.class_images[j]);
  IntMat w = l == 0 ? IntMat(0, 0) : inverse_unimodular(images);
  out.identification = IntMat::adjoined(t, s.projection.matrix * w);
  return out;
}

JoinReport join_report(const CayleyDecomposition& decomp) {
  JoinReport rep;
  if (decomp.parts.empty())
    throw std::invalid_argument("decomposition without parts");
  const Int& p = decomp.parts[0].characteristic.p;
  Int rank_sum = 0;
  for (const auto& part : decomp.parts) {
    Int rk(affine_rank_over_Z(part.points));
    Int dk(affine_dim_over_k(part.points, p));
    rep.per_part_gaps.push_back(rk - dk);
    rank_sum += rk;
  }
  std::size_t base = decomp.parts.empty() ? 0 : decomp.parts[0].ambient_rank;
  Int n = Int(base) + Int(decomp.l);
  rep.join_dim = Int(decomp.l) + rank_sum;
  rep.codimension = rep.join_dim - n;
  rep.is_join = rep.codimension == 0;
  return rep;
}

JoinDecomposition join_decomposition_char0(
    const std::vector<IntVec>& raw_points) {
  JoinDecomposition out;
  out.structure = analyze(raw_points, Int(0));
  if (!out.structure.invariants.separable)
    throw std::logic_error("characteristic-zero analysis not separable");
  out.decomposition = cayley_decompose(out.structure);
  out.report = join_report(out.decomposition);
  if (!out.report.is_join)
    throw std::logic_error("characteristic-zero join with positive codimension");
  return out;
}

}  // namespace gausstoric
