#ifndef NEK_FACTORED_HPP
#define NEK_FACTORED_HPP

#include <map>

#include "nek/linear_form.hpp"
#include "nek/multipoly.hpp"

namespace nek::alg {

struct DivideByZeroScalarError : std::domain_error {
  DivideByZeroScalarError() : std::domain_error("division by factored rational with zero scalar") {}
};

// scalar * prod form_i^e_i with canonical linear-form factors and integer
// exponents. Multiplication and division are exact exponent arithmetic on
// matching factors; no factor is kept with exponent zero.
class FactoredRational {
 public:
  FactoredRational() = default;
  explicit FactoredRational(Rat scalar) : scalar_(std::move(scalar)) {}

  const Rat& scalar() const { return scalar_; }
  const std::map<LinearForm, long>& factors() const { return factors_; }
  bool is_zero() const { return scalar_ == 0; }

  // Multiply by form^e; the form is canonicalized and its scale folded
  // into the scalar.
  void push(const LinearForm& form, long e = 1);

  FactoredRational& operator*=(const FactoredRational& o);
  FactoredRational& operator/=(const FactoredRational& o);
  friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
  friend FactoredRational operator/(FactoredRational a, const FactoredRational& b) { return a /= b; }

  Rat eval(const std::vector<Rat>& point) const;  // throws on zero factor with e<0

  // Expanded numerator (factors with e>0, scalar folded in) and
  // denominator (factors with e<0).
  std::pair<MultiPoly, MultiPoly> expand() const;

  bool operator==(const FactoredRational& o) const {
    return scalar_ == o.scalar_ && factors_ == o.factors_;
  }

 private:
  Rat scalar_ = 1;
  std::map<LinearForm, long> factors_;
};

}  // namespace nek::alg

#endif
