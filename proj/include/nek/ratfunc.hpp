#ifndef NEK_RATFUNC_HPP
#define NEK_RATFUNC_HPP

#include <optional>
#include <string>

#include "nek/eval.hpp"
#include "nek/factored.hpp"
#include "nek/multipoly.hpp"

namespace nek::alg {

struct DivideByZeroError : std::domain_error {
  DivideByZeroError() : std::domain_error("division by zero rational function") {}
};
struct ZeroDenominatorAfterSubstitutionError : std::domain_error {
  ZeroDenominatorAfterSubstitutionError()
      : std::domain_error("substitution maps denominator to zero") {}
};

// num/den with den != 0, kept in canonical form: the leading coefficient of
// den is 1 (num scaled to match) and a zero numerator forces den = 1.
// Equality is decided by cross-multiplication; no multivariate gcd.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(MultiPoly::one()) {}
  RationalFunction(MultiPoly num, MultiPoly den);
  static RationalFunction constant(Rat c) {
    return RationalFunction(MultiPoly::constant(std::move(c)), MultiPoly::one());
  }
  static RationalFunction from_factored(const FactoredRational& x);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction scaled(const Rat& s) const;

  // Exact substitution x_v -> image(v), total on occurring variables.
  RationalFunction substituted(const std::function<const LinearForm&(VarIndex)>& image) const;

  std::optional<Rat> eval(const std::vector<Rat>& point) const;  // nullopt if den vanishes
  bool admissible(const EvalPoint& p) const { return den_.eval(p.values) != 0; }

  // Structural equality of canonical representatives (same num, same den).
  bool identical(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  std::string to_string(const VarTable& vars) const;

 private:
  MultiPoly num_, den_;
};

// ---- equality ----

struct EqCertificate {
  bool equal = false;
  bool symbolic = false;
  uint64_t seed = 0;
  std::vector<EvalPoint> points;           // sampled points (randomized mode)
  std::optional<EvalPoint> witness;        // disagreeing point, when !equal
};

// Exact: num_a * den_b == num_b * den_a.
bool rf_eq_symbolic(const RationalFunction& a, const RationalFunction& b);

// Schwartz-Zippel test at k admissible points. "true" is probabilistic,
// "false" is definitive and carries the witnessing point.
EqCertificate rf_eq_randomized(const RationalFunction& a, const RationalFunction& b,
                               int k, uint64_t seed, int nvars);

// ---- canonical JSON ----

// {"vars":[...],"num":[[[e...],"p/q"],...],"den":[...]} with terms in the
// monomial order (leading first). Byte-stable across runs.
std::string rf_to_json(const RationalFunction& x, const VarTable& vars);
RationalFunction rf_from_json(const std::string& json, VarTable* vars_out = nullptr);

}  // namespace nek::alg

#endif
