#include "nek/factored.hpp"

namespace nek::alg {

void FactoredRational::push(const LinearForm& form, long e) {
  if (e == 0 || scalar_ == 0) return;
  auto [canon, scale] = form.canonicalized();
  for (long i = 0; i < e; ++i) scalar_ *= scale;
  for (long i = 0; i > e; --i) scalar_ /= scale;
  if (canon.is_constant()) return;  // fully absorbed by the scale
  auto it = factors_.find(canon);
  if (it == factors_.end()) {
    factors_.emplace(std::move(canon), e);
  } else {
    it->second += e;
    if (it->second == 0) factors_.erase(it);
  }
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
  if (o.scalar_ == 0 || scalar_ == 0) {
    scalar_ = 0;
    factors_.clear();
    return *this;
  }
  scalar_ *= o.scalar_;
  for (const auto& [f, e] : o.factors_) {
    auto it = factors_.find(f);
    if (it == factors_.end()) {
      factors_.emplace(f, e);
    } else {
      it->second += e;
      if (it->second == 0) factors_.erase(it);
    }
  }
  return *this;
}

FactoredRational& FactoredRational::operator/=(const FactoredRational& o) {
  if (o.scalar_ == 0) throw DivideByZeroScalarError();
  if (scalar_ == 0) return *this;
  scalar_ /= o.scalar_;
  for (const auto& [f, e] : o.factors_) {
    auto it = factors_.find(f);
    if (it == factors_.end()) {
      factors_.emplace(f, -e);
    } else {
      it->second -= e;
      if (it->second == 0) factors_.erase(it);
    }
  }
  return *this;
}

Rat FactoredRational::eval(const std::vector<Rat>& point) const {
  Rat acc = scalar_;
  for (const auto& [f, e] : factors_) {
    Rat v = f.eval(point);
    if (v == 0) {
      if (e < 0) throw std::domain_error("factored rational: zero denominator factor");
      return 0;
    }
    for (long i = 0; i < e; ++i) acc *= v;
    for (long i = 0; i > e; --i) acc /= v;
  }
  return acc;
}

std::pair<MultiPoly, MultiPoly> FactoredRational::expand() const {
  MultiPoly num = MultiPoly::constant(scalar_);
  MultiPoly den = MultiPoly::one();
  for (const auto& [f, e] : factors_) {
    for (long i = 0; i < e; ++i) num = num.times_linear(f);
    for (long i = 0; i > e; --i) den = den.times_linear(f);
  }
  return {std::move(num), std::move(den)};
}

}  // namespace nek::alg
