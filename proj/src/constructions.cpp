#include "gausstoric/constructions.hpp"

#include <set>
#include <sstream>

namespace gausstoric {

namespace {

void require_normalized_with_zero_origin(const PointConfiguration& c,
                                         const char* label) {
  std::ostringstream os;
  if (!vec_is_zero(c.points[0])) {
    os << label << " must have first point 0";
    throw precondition_error(os.str());
  }
  if (affine_rank_over_Z(c.points) != c.ambient_rank) {
    os << label << " must affinely span its ambient lattice";
    throw precondition_error(os.str());
  }
}

void require_positive_prime(const Int& p) {
  if (p <= 0 || !is_prime(p))
    throw precondition_error("construction requires positive characteristic");
}

// pi : Z^n -> Z^(n'), e_i |-> u'_i for 1 <= i <= #A'-1, e_i |-> 0 beyond.
IntMat projection_onto_fiber(const PointConfiguration& fiber, std::size_t n) {
  IntMat pi(n, fiber.ambient_rank);
  for (std::size_t i = 1; i < fiber.size(); ++i)
    pi.set_row(i - 1, fiber.points[i]);
  return pi;
}

IntVec standard_basis_vector(std::size_t n, std::size_t i) {
  IntVec v(n);
  v[i] = 1;
  return v;
}

std::string points_to_string(const PointConfiguration& c) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < c.ambient_rank; ++j)
      os << (j ? "," : "") << c.points[i][j].get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

ConstructionResult with_fiber_and_image(const PointConfiguration& fiber,
                                        const PointConfiguration& image,
                                        const Int& c, const Int& p) {
  require_positive_prime(p);
  if (c <= 0 || gcd(c, p) != 1)
    throw precondition_error("component count must be positive and coprime to p");
  require_normalized_with_zero_origin(fiber, "fiber configuration");
  require_normalized_with_zero_origin(image, "image configuration");
  std::size_t np = fiber.ambient_rank;
  std::size_t npp = image.ambient_rank;
  if (npp < 1)
    throw precondition_error("image configuration must have rank >= 1");
  std::size_t n = np + npp;
  if (n + 1 < fiber.size())
    throw precondition_error(
        "violated: rank(A') + rank(A'') >= #A' - 1");

  IntMat pi = projection_onto_fiber(fiber, n);
  Lattice ker = kernel_basis(pi);
  IntMat embed = embed_with_cokernel(ker, c);  // npp x n

  PointConfiguration out;
  out.ambient_rank = n;
  out.characteristic = Characteristic::checked(p);
  for (std::size_t i = 0; i < n; ++i)
    out.points.push_back(standard_basis_vector(n, i));
  for (const auto& f : image.points)
    out.points.push_back(vec_scaled(row_times(f, embed), p));

  ConstructionResult res;
  res.config = out;
  res.generator = "5.1";
  res.parameters["fiber"] = points_to_string(fiber);
  res.parameters["image"] = points_to_string(image);
  res.parameters["c"] = c.get_str();
  res.parameters["p"] = p.get_str();
  return res;
}

ConstructionResult with_fiber_rank_components(const PointConfiguration& fiber,
                                              unsigned long r, const Int& c,
                                              const Int& p, std::size_t n,
                                              std::size_t big_n) {
  require_positive_prime(p);
  if (c <= 0 || gcd(c, p) != 1)
    throw precondition_error("component count must be positive and coprime to p");
  if (r == 0) throw precondition_error("rank must be positive");
  if (p == 2 && r == 1)
    throw precondition_error("violated: (p, r) != (2, 1)");
  require_normalized_with_zero_origin(fiber, "fiber configuration");
  std::size_t np = fiber.ambient_rank;
  std::size_t fiber_top = fiber.size() - 1;  // N'
  if (n < fiber_top + r || n < np + r + 1)
    throw precondition_error(
        "violated: n >= max(#A' - 1 + r, rank(A') + r + 1)");
  bool odd_char2 = p == 2 && r % 2 == 1;
  std::size_t n_bound = 2 * n - np - r + (odd_char2 ? 2 : 1);
  if (big_n < n_bound) {
    std::ostringstream os;
    os << "violated: N >= " << n_bound;
    throw precondition_error(os.str());
  }

  IntMat pi = projection_onto_fiber(fiber, n);
  Lattice ker = kernel_basis(pi);

  // e_{N'+1}, ..., e_{N'+r} already lie in the kernel; complete them.
  IntMat partial(r, n);
  for (std::size_t i = 0; i < r; ++i)
    partial.set_row(i, standard_basis_vector(n, fiber_top + i));
  IntMat completion = complete_to_kernel_basis(ker, partial);

  std::vector<IntVec> points;
  std::set<IntVec> seen;
  auto push = [&](const IntVec& v) {
    if (seen.insert(v).second) points.push_back(v);
  };

  // C part: basis points, the origin, and p-multiples of the completion
  // (the first completed vector carries the extra factor c).
  for (std::size_t i = 0; i < n; ++i) push(standard_basis_vector(n, i));
  push(IntVec(n));
  for (std::size_t j = 0; j < completion.rows(); ++j) {
    Int scale = j == 0 ? Int(c * p) : p;
    push(vec_scaled(completion.row(j), scale));
  }

  // D part: depends on r mod p.
  IntVec full_sum(n);
  for (std::size_t i = 0; i < r; ++i) full_sum[fiber_top + i] = 1;
  if (mod_positive(Int(r), p) != 1) {
    push(full_sum);
  } else if (mod_positive(Int(r) + 1, p) != 0) {
    push(vec_scaled(full_sum, Int(-1)));
  } else {
    // p = 2, r odd >= 3
    IntVec two(n);
    two[fiber_top] = 1;
    two[fiber_top + 1] = 1;
    IntVec tail(n);
    for (std::size_t i = 1; i < r; ++i) tail[fiber_top + i] = 1;
    push(two);
    push(tail);
  }

  // E padding: multiples of e_{N'+1} stay inside the lattice generated by
  // B - B, so they never disturb the analysis.
  Int multiple = 2;
  while (points.size() < big_n + 1) {
    IntVec v(n);
    v[fiber_top] = multiple;
    push(v);
    ++multiple;
  }
  if (points.size() != big_n + 1)
    throw std::logic_error("padding produced a wrong point count");

  ConstructionResult res;
  res.config.ambient_rank = n;
  res.config.characteristic = Characteristic::checked(p);
  res.config.points = std::move(points);
  res.generator = "5.5";
  res.parameters["fiber"] = points_to_string(fiber);
  res.parameters["r"] = std::to_string(r);
  res.parameters["c"] = c.get_str();
  res.parameters["p"] = p.get_str();
  res.parameters["n"] = std::to_string(n);
  res.parameters["N"] = std::to_string(big_n);
  return res;
}

ConstructionResult birational_hypersurface(std::size_t n,
                                           const IntVec& coeffs,
                                           const Int& p) {
  if (coeffs.size() != n)
    throw precondition_error("need one coefficient per dimension");
  if (p != 0 && !is_prime(p))
    throw input_error("characteristic must be 0 or prime");
  Int sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool zero_in_k = p == 0 ? coeffs[i] == 0 : mod_positive(coeffs[i], p) == 0;
    if (zero_in_k) {
      std::ostringstream os;
      os << "violated: a_" << (i + 1) << " must be nonzero in k";
      throw precondition_error(os.str());
    }
    sum += coeffs[i];
  }
  bool sum_is_one = p == 0 ? sum == 1 : mod_positive(sum - 1, p) == 0;
  if (sum_is_one)
    throw precondition_error("violated: sum of coefficients must differ from 1 in k");

  ConstructionResult res;
  res.config.ambient_rank = n;
  res.config.characteristic = Characteristic::checked(p);
  res.config.points.push_back(IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    res.config.points.push_back(standard_basis_vector(n, i));
  res.config.points.push_back(coeffs);
  res.generator = "hypersurface";
  res.parameters["n"] = std::to_string(n);
  res.parameters["p"] = p.get_str();
  {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n; ++i)
      os << (i ? "," : "") << coeffs[i].get_str();
    os << "]";
    res.parameters["coefficients"] = os.str();
  }
  return res;
}

ConstructionResult birational_codim2(std::size_t n, const Int& p) {
  if (n < 2) throw precondition_error("violated: n >= 2");
  if (p != 0 && !is_prime(p))
    throw input_error("characteristic must be 0 or prime");
  ConstructionResult res;
  res.config.ambient_rank = n;
  res.config.characteristic = Characteristic::checked(p);
  std::set<IntVec> seen;
  auto push = [&](const IntVec& v) {
    if (seen.insert(v).second) res.config.points.push_back(v);
  };
  push(IntVec(n));
  for (std::size_t i = 0; i < n; ++i) push(standard_basis_vector(n, i));
  IntVec pair(n);
  pair[0] = 1;
  pair[1] = 1;
  push(pair);
  IntVec tail(n);
  for (std::size_t i = 1; i < n; ++i) tail[i] = 1;
  push(tail);  // coincides with e_2 when n = 2
  res.generator = "codim2";
  res.parameters["n"] = std::to_string(n);
  res.parameters["p"] = p.get_str();
  return res;
}

}  // namespace gausstoric
