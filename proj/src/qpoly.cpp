#include "hookline/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "hookline/error.hpp"

namespace hookline {

QPoly::QPoly(std::vector<Count> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int degree, Count c) {
  std::vector<Count> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Count QPoly::evaluate(Count q) const {
  Count r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = checked::add(checked::mul(r, q), *it);
  return r;
}

QPoly QPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<Count> v(static_cast<std::size_t>(k), 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

QPoly QPoly::truncated(int order) const {
  if (order < 0) return {};
  const auto keep = std::min(coeffs_.size(), static_cast<std::size_t>(order) + 1);
  return QPoly(std::vector<Count>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(keep)));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked::add(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked::sub(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Count> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] = checked::add(r[i + j], checked::mul(coeffs_[i], o.coeffs_[j]));
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

QPoly exact_divide(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw Error("division by the zero polynomial");
  if (num.is_zero()) return {};
  std::vector<Count> rem = num.coeffs();
  const int dd = den.degree();
  const Count lead = den.coeff(dd);
  if (num.degree() < dd) throw Error("polynomial division is not exact");
  std::vector<Count> quot(static_cast<std::size_t>(num.degree() - dd) + 1, 0);
  for (int d = num.degree(); d >= dd; --d) {
    const Count c = rem[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    if (c % lead != 0) throw Error("polynomial division is not exact");
    const Count f = c / lead;
    quot[static_cast<std::size_t>(d - dd)] = f;
    for (int i = 0; i <= dd; ++i) {
      auto& slot = rem[static_cast<std::size_t>(d - dd + i)];
      slot = checked::sub(slot, checked::mul(f, den.coeff(i)));
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](Count c) { return c != 0; }))
    throw Error("polynomial division is not exact");
  return QPoly(std::move(quot));
}

QPoly series_inverse(const QPoly& p, int order) {
  const Count c0 = p.coeff(0);
  if (c0 != 1 && c0 != -1) throw Error("series inverse needs a unit constant term");
  if (order < 0) return {};
  std::vector<Count> inv(static_cast<std::size_t>(order) + 1, 0);
  inv[0] = c0;  // 1/c0 == c0 for a unit
  for (int d = 1; d <= order; ++d) {
    Count s = 0;
    for (int i = 1; i <= std::min(d, p.degree()); ++i)
      s = checked::add(s, checked::mul(p.coeff(i), inv[static_cast<std::size_t>(d - i)]));
    inv[static_cast<std::size_t>(d)] = checked::mul(-s, c0);
  }
  return QPoly(std::move(inv));
}

QPoly truncated_product(const QPoly& a, const QPoly& b, int order) {
  return (a.truncated(order) * b.truncated(order)).truncated(order);
}

QPoly one_minus_q_pow(int k) { return QPoly::constant(1) - QPoly::monomial(k); }

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = 0; d <= p.degree(); ++d) {
    Count c = p.coeff(d);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Count mag = c < 0 ? -c : c;
    if (d == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << 'q';
    if (d > 1) out << '^' << d;
  }
  return out.str();
}

}  // namespace hookline
