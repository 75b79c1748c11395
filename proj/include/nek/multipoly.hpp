#ifndef NEK_MULTIPOLY_HPP
#define NEK_MULTIPOLY_HPP

#include <functional>
#include <optional>
#include <vector>

#include "nek/linear_form.hpp"
#include "nek/monomial.hpp"
#include "nek/rational.hpp"

namespace nek::alg {

// Sparse multivariate polynomial over Q. Terms are kept sorted in
// descending graded lexicographic order with no zero coefficients,
// so equality is structural and serialization order is canonical.
class MultiPoly {
 public:
  struct Term {
    Mono mono;
    Rat coeff;
  };

  MultiPoly() = default;
  static MultiPoly constant(Rat c);
  static MultiPoly one() { return constant(1); }
  static MultiPoly variable(VarIndex v);
  static MultiPoly from_linear(const LinearForm& f);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  size_t size() const { return terms_.size(); }
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  void scale(const Rat& s);
  MultiPoly scaled(Rat s) const;
  MultiPoly shifted(const Mono& m, const Rat& c) const;  // * c*m

  // poly * linear form, via one merge per entry of the form.
  MultiPoly times_linear(const LinearForm& f) const;

  // Exact division by a non-constant linear form; nullopt if not divisible.
  std::optional<MultiPoly> divided_by_linear(const LinearForm& f) const;

  // Content: positive rational c with (*this)/c having coprime integer
  // coefficients. Zero polynomial has content 0.
  Rat content() const;

  // Coefficient of x_v^k, as a polynomial with the exponent of v cleared.
  MultiPoly coefficient_of(VarIndex v, int k) const;
  int degree_in(VarIndex v) const;

  Rat eval(const std::vector<Rat>& point) const;

  // Simultaneous substitution x_v -> image(v) for every occurring variable.
  MultiPoly substituted(const std::function<const LinearForm&(VarIndex)>& image) const;

  bool operator==(const MultiPoly& o) const;

  std::string to_string(const VarTable& vars) const;

  // Terms must be strictly descending; used by deserialization.
  static MultiPoly from_sorted_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

// Expand a product of linear forms.
MultiPoly expand_product(const std::vector<LinearForm>& forms);

}  // namespace nek::alg

#endif
