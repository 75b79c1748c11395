#include "nek/eval.hpp"

#include "nek/linear_form.hpp"

namespace nek::alg {

Rat PointSampler::sample_rational() {
  std::uniform_int_distribution<long> dist(-kRange, kRange);
  long num = 0, den = 0;
  while (num == 0) num = dist(rng_);
  while (den == 0) den = dist(rng_);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

EvalPoint PointSampler::sample_point(int nvars) {
  EvalPoint p;
  p.seed = seed_;
  p.values.reserve(nvars);
  for (int i = 0; i < nvars; ++i) p.values.push_back(sample_rational());
  return p;
}

EvalPoint PointSampler::sample_admissible(
    int nvars, const std::function<bool(const EvalPoint&)>& admissible) {
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    EvalPoint p = sample_point(nvars);
    if (admissible(p)) return p;
  }
  throw SamplingExhaustedError();
}

std::vector<Rat> zero_point_of(const LinearForm& form, int nvars, uint64_t attempt) {
  // Seed from the form's canonical bytes so the witness is reproducible.
  uint64_t h = 1469598103934665603ull ^ attempt;
  for (const auto& [v, c] : form.coeffs()) {
    h ^= static_cast<uint64_t>(v);
    h *= 1099511628211ull;
    h ^= std::hash<std::string>{}(c.get_str());
    h *= 1099511628211ull;
  }
  std::mt19937_64 rng(h);
  std::uniform_int_distribution<int> dist(-99, 99);
  std::vector<Rat> pt(nvars, Rat(0));
  for (auto& x : pt) x = dist(rng);
  const VarIndex pv = form.coeffs().front().first;
  const Rat& pc = form.coeffs().front().second;
  Rat rest = form.constant();
  for (size_t i = 1; i < form.coeffs().size(); ++i)
    rest += form.coeffs()[i].second * pt[form.coeffs()[i].first];
  pt[pv] = -rest / pc;
  return pt;
}

}  // namespace nek::alg
