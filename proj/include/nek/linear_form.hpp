#ifndef NEK_LINEAR_FORM_HPP
#define NEK_LINEAR_FORM_HPP

#include <utility>
#include <vector>

#include "nek/rational.hpp"
#include "nek/vars.hpp"

namespace nek::alg {

struct ZeroFormError : std::domain_error {
  ZeroFormError() : std::domain_error("zero linear form has no canonical scale") {}
};

// Affine-linear expression c0 + sum c_v x_v with rational coefficients.
// Zero coefficients are never stored; entries are sorted by variable.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(Rat constant) : constant_(std::move(constant)) {}

  static LinearForm variable(VarIndex v, Rat coeff = 1) {
    LinearForm f;
    f.set_coeff(v, std::move(coeff));
    return f;
  }

  const Rat& constant() const { return constant_; }
  const std::vector<std::pair<VarIndex, Rat>>& coeffs() const { return coeffs_; }

  bool is_zero() const { return constant_ == 0 && coeffs_.empty(); }
  bool is_constant() const { return coeffs_.empty(); }

  Rat coeff(VarIndex v) const;
  void set_constant(Rat c) { constant_ = std::move(c); }
  void set_coeff(VarIndex v, Rat c);
  void add_term(VarIndex v, const Rat& c) { set_coeff(v, coeff(v) + c); }

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const Rat& s);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Rat& s) { return a *= s; }
  LinearForm operator-() const;

  Rat eval(const std::vector<Rat>& point) const;

  // Canonical representative and the scale relating it to *this:
  // *this == scale * canonical. Canonical forms have coprime integer
  // entries and positive leading coefficient (first variable present,
  // else the constant). Idempotent.
  std::pair<LinearForm, Rat> canonicalized() const;

  bool operator==(const LinearForm& o) const {
    return constant_ == o.constant_ && coeffs_ == o.coeffs_;
  }
  bool operator<(const LinearForm& o) const;

  std::string to_string(const VarTable& vars) const;

 private:
  Rat constant_ = 0;
  std::vector<std::pair<VarIndex, Rat>> coeffs_;  // sorted by VarIndex
};

}  // namespace nek::alg

#endif
