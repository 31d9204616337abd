#ifndef COAF_DOUBLE_DESCRIPTION_HPP
#define COAF_DOUBLE_DESCRIPTION_HPP

#include "coaf/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <vector>

namespace coaf {

/// Generators of a polyhedral cone: { Σ μ_i lineality_i + Σ ρ_j rays_j : ρ ≥ 0 }.
///
/// `rays` are the extreme rays modulo the lineality space. They are primitive
/// integer vectors, orthogonal to the lineality space whenever it is nonzero.
/// `tight[j]` holds the indices of the input constraints with a·rays[j] = 0.
struct ConeGenerators {
  std::vector<Vector> lineality;
  std::vector<Vector> rays;
  std::vector<boost::dynamic_bitset<>> tight;
};

/// Double description: generators of { x ∈ R^dim : a·x ≥ 0 for every a }.
///
/// Constraints are added one at a time (Motzkin's incremental scheme) with the
/// combinatorial adjacency test; all arithmetic is exact.
ConeGenerators cone_generators(const std::vector<Vector>& constraints, Eigen::Index dim);

}  // namespace coaf

#endif  // COAF_DOUBLE_DESCRIPTION_HPP
