#include "nek/linear_form.hpp"

#include <algorithm>
#include <sstream>

namespace nek::alg {

Rat LinearForm::coeff(VarIndex v) const {
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), v,
                             [](const auto& p, VarIndex x) { return p.first < x; });
  if (it != coeffs_.end() && it->first == v) return it->second;
  return 0;
}

void LinearForm::set_coeff(VarIndex v, Rat c) {
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), v,
                             [](const auto& p, VarIndex x) { return p.first < x; });
  if (it != coeffs_.end() && it->first == v) {
    if (c == 0)
      coeffs_.erase(it);
    else
      it->second = std::move(c);
  } else if (c != 0) {
    coeffs_.insert(it, {v, std::move(c)});
  }
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant_ += o.constant_;
  for (const auto& [v, c] : o.coeffs_) add_term(v, c);
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  constant_ -= o.constant_;
  for (const auto& [v, c] : o.coeffs_) add_term(v, -c);
  return *this;
}

LinearForm& LinearForm::operator*=(const Rat& s) {
  if (s == 0) {
    constant_ = 0;
    coeffs_.clear();
    return *this;
  }
  constant_ *= s;
  for (auto& [v, c] : coeffs_) c *= s;
  return *this;
}

LinearForm LinearForm::operator-() const {
  LinearForm r = *this;
  r *= Rat(-1);
  return r;
}

Rat LinearForm::eval(const std::vector<Rat>& point) const {
  Rat acc = constant_;
  for (const auto& [v, c] : coeffs_) acc += c * point.at(v);
  return acc;
}

std::pair<LinearForm, Rat> LinearForm::canonicalized() const {
  if (is_zero()) throw ZeroFormError();
  Rat content = abs(constant_);
  for (const auto& [v, c] : coeffs_) content = rat_content_gcd(content, c);
  const Rat& lead = coeffs_.empty() ? constant_ : coeffs_.front().second;
  if (sign(lead) < 0) content = -content;
  LinearForm g = *this;
  Rat inv = 1 / content;
  g *= inv;
  return {std::move(g), content};
}

bool LinearForm::operator<(const LinearForm& o) const {
  size_t n = std::min(coeffs_.size(), o.coeffs_.size());
  for (size_t i = 0; i < n; ++i) {
    if (coeffs_[i].first != o.coeffs_[i].first)
      return coeffs_[i].first < o.coeffs_[i].first;
    int c = cmp(coeffs_[i].second, o.coeffs_[i].second);
    if (c != 0) return c < 0;
  }
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
  return cmp(constant_, o.constant_) < 0;
}

std::string LinearForm::to_string(const VarTable& vars) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, c] : coeffs_) {
    if (!first && sign(c) > 0) out << "+";
    if (c == -1)
      out << "-";
    else if (c != 1)
      out << c.get_str() << "*";
    out << vars.name(v);
    first = false;
  }
  if (constant_ != 0 || first) {
    if (!first && sign(constant_) > 0) out << "+";
    out << constant_.get_str();
  }
  return out.str();
}

}  // namespace nek::alg
