#pragma once

#include <string>
#include <vector>

#include "hookline/checked.hpp"

namespace hookline {

/// Polynomial in q with exact int64 coefficients, stored by ascending degree
/// without trailing zeros. Every arithmetic operation is overflow checked.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Count> coeffs);

  static QPoly constant(Count c) { return QPoly({c}); }
  /// c q^degree
  static QPoly monomial(int degree, Count c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Count coeff(int d) const {
    return d >= 0 && d <= degree() ? coeffs_[static_cast<std::size_t>(d)] : 0;
  }
  const std::vector<Count>& coeffs() const { return coeffs_; }

  Count evaluate(Count q) const;
  /// Sum of coefficients, i.e. the value at q = 1.
  Count total() const { return evaluate(1); }

  /// Multiplies by q^k.
  QPoly shifted(int k) const;
  /// Drops every term of degree > order.
  QPoly truncated(int order) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<Count> coeffs_;
};

/// Exact quotient num / den. Throws Error when den does not divide num.
QPoly exact_divide(const QPoly& num, const QPoly& den);

/// Power series 1/p truncated at the given order; p(0) must be 1 or -1.
QPoly series_inverse(const QPoly& p, int order);

/// Product truncated at the given order.
QPoly truncated_product(const QPoly& a, const QPoly& b, int order);

/// 1 - q^k
QPoly one_minus_q_pow(int k);

/// "1 + q + 2q^2 + q^3 + q^4"; "0" for the zero polynomial.
std::string to_string(const QPoly& p);

}  // namespace hookline
