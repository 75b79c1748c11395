#include "nek/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace nek::alg {

MultiPoly MultiPoly::constant(Rat c) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({Mono{}, std::move(c)});
  return p;
}

MultiPoly MultiPoly::variable(VarIndex v) {
  MultiPoly p;
  Mono m;
  m.set_exp(v, 1);
  p.terms_.push_back({m, Rat(1)});
  return p;
}

MultiPoly MultiPoly::from_linear(const LinearForm& f) {
  MultiPoly p;
  for (const auto& [v, c] : f.coeffs()) {
    Mono m;
    m.set_exp(v, 1);
    p.terms_.push_back({m, c});
  }
  if (f.constant() != 0) p.terms_.push_back({Mono{}, f.constant()});
  return p;  // entries by ascending var == descending graded lex, constant last
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

namespace {

// Merge two descending term streams, combining equal monomials.
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b,
                                         bool negate_b) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono > b[j].mono) {
      out.push_back(a[i++]);
    } else if (b[j].mono > a[i].mono) {
      out.push_back(b[j]);
      if (negate_b) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rat c = negate_b ? Rat(a[i].coeff - b[j].coeff) : Rat(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (negate_b) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  return MultiPoly::from_sorted_terms(merge_terms(a.terms(), b.terms(), false));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  return MultiPoly::from_sorted_terms(merge_terms(a.terms(), b.terms(), true));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void MultiPoly::scale(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) t.coeff *= s;
}

MultiPoly MultiPoly::scaled(Rat s) const {
  MultiPoly r = *this;
  r.scale(s);
  return r;
}

MultiPoly MultiPoly::shifted(const Mono& m, const Rat& c) const {
  MultiPoly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::times_linear(const LinearForm& f) const {
  MultiPoly acc;
  for (const auto& [v, c] : f.coeffs()) {
    Mono m;
    m.set_exp(v, 1);
    acc = acc + shifted(m, c);
  }
  if (f.constant() != 0) acc = acc + scaled(f.constant());
  return acc;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const MultiPoly& small = a.size() <= b.size() ? a : b;
  const MultiPoly& big = a.size() <= b.size() ? b : a;
  if (small.size() <= 8) {
    MultiPoly acc;
    for (const auto& t : small.terms()) acc = acc + big.shifted(t.mono, t.coeff);
    return acc;
  }
  std::unordered_map<Mono, Rat, MonoHash> table;
  table.reserve(big.size() * 2);
  for (const auto& ts : small.terms())
    for (const auto& tb : big.terms()) {
      auto [it, fresh] = table.try_emplace(ts.mono * tb.mono, 0);
      it->second += ts.coeff * tb.coeff;
    }
  std::vector<MultiPoly::Term> out;
  out.reserve(table.size());
  for (auto& [m, c] : table)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return y.mono < x.mono; });
  return MultiPoly::from_sorted_terms(std::move(out));
}

std::optional<MultiPoly> MultiPoly::divided_by_linear(const LinearForm& f) const {
  if (f.coeffs().empty()) {
    if (f.constant() == 0) throw std::domain_error("division by zero form");
    return scaled(1 / f.constant());
  }
  if (is_zero()) return MultiPoly{};
  const VarIndex pv = f.coeffs().front().first;
  const Rat& pc = f.coeffs().front().second;
  LinearForm rest = f;
  rest.set_coeff(pv, 0);

  // Synthetic division viewing *this as a polynomial in the pivot variable.
  std::map<int, std::vector<Term>, std::greater<int>> buckets;
  for (const auto& t : terms_) {
    Mono m = t.mono;
    int k = m.exp(pv);
    m.set_exp(pv, 0);
    buckets[k].push_back({m, t.coeff});
  }
  for (auto& [k, v] : buckets)
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return y.mono < x.mono; });

  const int top = buckets.begin()->first;
  if (top == 0) return std::nullopt;
  MultiPoly cur = from_sorted_terms(std::move(buckets[top]));
  std::vector<Term> quotient;
  const Rat inv = 1 / pc;
  for (int k = top; k >= 1; --k) {
    MultiPoly qk = cur.scaled(inv);
    for (const auto& t : qk.terms()) {
      Mono m = t.mono;
      m.set_exp(pv, k - 1);
      quotient.push_back({m, t.coeff});
    }
    auto nit = buckets.find(k - 1);
    MultiPoly next = nit == buckets.end() ? MultiPoly{} : from_sorted_terms(nit->second);
    if (!rest.is_zero()) next = next - qk.times_linear(rest);
    cur = std::move(next);
  }
  if (!cur.is_zero()) return std::nullopt;  // remainder
  std::sort(quotient.begin(), quotient.end(),
            [](const auto& x, const auto& y) { return y.mono < x.mono; });
  return from_sorted_terms(std::move(quotient));
}

Rat MultiPoly::content() const {
  Rat c = 0;
  for (const auto& t : terms_) c = rat_content_gcd(c, t.coeff);
  return c;
}

MultiPoly MultiPoly::coefficient_of(VarIndex v, int k) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.exp(v) == k) {
      Mono m = t.mono;
      m.set_exp(v, 0);
      out.push_back({m, t.coeff});
    }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return y.mono < x.mono; });
  return from_sorted_terms(std::move(out));
}

int MultiPoly::degree_in(VarIndex v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exp(v));
  return d;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
  // Cache powers per variable up to the degree that actually occurs.
  std::vector<std::vector<Rat>> pow(point.size());
  for (size_t v = 0; v < point.size(); ++v) pow[v].push_back(1);
  Rat acc = 0;
  for (const auto& t : terms_) {
    Rat val = t.coeff;
    for (size_t v = 0; v < point.size(); ++v) {
      int e = t.mono.exp(static_cast<int>(v));
      if (e == 0) continue;
      auto& p = pow[v];
      while (static_cast<int>(p.size()) <= e) {
        Rat nx = p.back() * point[v];
        p.push_back(std::move(nx));
      }
      val *= p[e];
    }
    acc += val;
  }
  return acc;
}

MultiPoly MultiPoly::substituted(
    const std::function<const LinearForm&(VarIndex)>& image) const {
  // Fast path: every occurring variable maps to +/- itself.
  bool signs_only = true;
  for (const auto& t : terms_)
    for (int v = 0; v < Mono::kMaxVars && signs_only; ++v)
      if (t.mono.exp(v) > 0) {
        const LinearForm& g = image(v);
        if (g.constant() != 0 || g.coeffs().size() != 1 ||
            g.coeffs()[0].first != v || abs(g.coeffs()[0].second) != 1)
          signs_only = false;
      }
  if (signs_only) {
    std::vector<Term> out = terms_;
    for (auto& t : out) {
      int flips = 0;
      for (int v = 0; v < Mono::kMaxVars; ++v) {
        int e = t.mono.exp(v);
        if (e > 0 && image(v).coeffs()[0].second < 0) flips += e;
      }
      if (flips & 1) t.coeff = -t.coeff;
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return y.mono < x.mono; });
    return from_sorted_terms(std::move(out));
  }

  std::vector<std::vector<MultiPoly>> powers(Mono::kMaxVars);
  auto power = [&](VarIndex v, int e) -> const MultiPoly& {
    auto& ladder = powers[v];
    if (ladder.empty()) ladder.push_back(one());
    while (static_cast<int>(ladder.size()) <= e)
      ladder.push_back(ladder.back().times_linear(image(v)));
    return ladder[e];
  };
  MultiPoly acc;
  for (const auto& t : terms_) {
    MultiPoly prod = constant(t.coeff);
    for (int v = 0; v < Mono::kMaxVars; ++v) {
      int e = t.mono.exp(v);
      if (e > 0) prod = prod * power(v, e);
    }
    acc = acc + prod;
  }
  return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::string MultiPoly::to_string(const VarTable& vars) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << (sign(t.coeff) < 0 ? " - " : " + ");
    Rat c = first ? t.coeff : Rat(abs(t.coeff));
    first = false;
    bool printed = false;
    if (c != 1 || t.mono.is_one()) {
      out << c.get_str();
      printed = true;
    }
    for (int v = 0; v < vars.size(); ++v) {
      int e = t.mono.exp(v);
      if (e == 0) continue;
      if (printed) out << "*";
      out << vars.name(v);
      if (e > 1) out << "^" << e;
      printed = true;
    }
  }
  return out.str();
}

MultiPoly MultiPoly::from_sorted_terms(std::vector<Term> terms) {
  MultiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

MultiPoly expand_product(const std::vector<LinearForm>& forms) {
  MultiPoly acc = MultiPoly::one();
  for (const auto& f : forms) acc = acc.times_linear(f);
  return acc;
}

}  // namespace nek::alg
