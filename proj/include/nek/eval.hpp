#ifndef NEK_EVAL_HPP
#define NEK_EVAL_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "nek/rational.hpp"

namespace nek::alg {

struct SamplingExhaustedError : std::runtime_error {
  SamplingExhaustedError()
      : std::runtime_error("no admissible evaluation point found (degenerate denominators)") {}
};

// Rational assignment to the context variables, together with the seed
// that produced it.
struct EvalPoint {
  std::vector<Rat> values;
  uint64_t seed = 0;
};

// Samples rational points with numerator and denominator drawn uniformly
// from [-10^6, 10^6] \ {0}. Redraws a point that is inadmissible for the
// expression at hand, at most kMaxRedraws times.
class PointSampler {
 public:
  static constexpr long kRange = 1000000;
  static constexpr int kMaxRedraws = 100;

  explicit PointSampler(uint64_t seed) : seed_(seed), rng_(seed) {}

  Rat sample_rational();
  EvalPoint sample_point(int nvars);

  // First sampled point (within the redraw budget) accepted by the predicate.
  EvalPoint sample_admissible(int nvars, const std::function<bool(const EvalPoint&)>& admissible);

 private:
  uint64_t seed_;
  std::mt19937_64 rng_;
};

// Deterministic point on the hyperplane {form = 0}; used as a cheap
// divisibility witness before attempting exact division. The point is a
// pure function of (form, attempt).
class LinearForm;
std::vector<Rat> zero_point_of(const LinearForm& form, int nvars, uint64_t attempt);

}  // namespace nek::alg

#endif
