#ifndef COAF_RANDOM_HPP
#define COAF_RANDOM_HPP

#include "coaf/family.hpp"

#include <cstdint>

namespace coaf {

/// SplitMix64 with the standard golden-gamma increment and finalizer.
///
/// Stream k of seed s starts from the state mix(s ^ mix(k + γ)), where mix is
/// the SplitMix64 output finalizer, so (seed, stream) pairs give independent,
/// reproducible sequences in any language.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  /// Uniform on [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// p/q with p uniform on [-bound, bound] and q uniform on [1, bound].
  Rational rational(std::int64_t bound);
  /// p/q with p, q uniform on [1, bound].
  Rational positive_rational(std::int64_t bound);

 private:
  std::uint64_t state_;
};

/// Raised when a generator exhausts its resampling budget.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxAttempts = 1000;
inline constexpr std::size_t kMaxVertices = 12;

/// Hull of d + 1 + extra random rational points, resampled until
/// full-dimensional with at most kMaxVertices vertices.
Polyhedron gen_convex_body(SplitMix64& rng, Eigen::Index d, std::int64_t bound);
/// Strictly convex cone with d (or, for d ≥ 3, sometimes d + 1) integer rays.
Cone gen_cone(SplitMix64& rng, Eigen::Index d, std::int64_t bound);
/// C ∩ {ξ_j·x ≥ b_j} for one to three cuts with ξ_j in the dual interior and b_j > 0.
CoconvexBody gen_coconvex_body(SplitMix64& rng, const Cone& cone, std::int64_t bound);
/// Positive coefficient vector of length n.
Vector gen_positive_vector(SplitMix64& rng, int n, std::int64_t bound);
/// Coefficient vector of length n with entries of either sign, not all zero.
Vector gen_vector(SplitMix64& rng, int n, std::int64_t bound);

ConvexFamily gen_convex_family(SplitMix64& rng, Eigen::Index d, int n, std::int64_t bound);
CoconvexFamily gen_coconvex_family(SplitMix64& rng, Eigen::Index d, int n, std::int64_t bound);

}  // namespace coaf

#endif  // COAF_RANDOM_HPP
