#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hookline/checked.hpp"
#include "hookline/index_set.hpp"
#include "hookline/qpoly.hpp"

namespace hookline {

/// Integer polynomial in x_1, x_2, ... whose monomials are squarefree, so
/// each monomial x_S is named by its index set S (stored as a bit mask,
/// indices 1..64). Zero coefficients are never stored.
class SubsetPoly {
 public:
  using Mask = std::uint64_t;

  SubsetPoly() = default;
  static SubsetPoly constant(Count c);
  static SubsetPoly monomial(const IndexSet& s, Count c = 1);

  Count coeff(const IndexSet& s) const;
  Count coeff_mask(Mask m) const;
  const std::map<Mask, Count>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Mask m, Count c);

  /// this * (x_j - 1). Throws Error if some monomial already contains x_j.
  SubsetPoly times_shifted_variable(int j) const;

  SubsetPoly& operator+=(const SubsetPoly& o);
  SubsetPoly& operator-=(const SubsetPoly& o);
  friend SubsetPoly operator+(SubsetPoly a, const SubsetPoly& b) { return a += b; }
  friend SubsetPoly operator-(SubsetPoly a, const SubsetPoly& b) { return a -= b; }
  SubsetPoly scaled(Count c) const;

  friend bool operator==(const SubsetPoly&, const SubsetPoly&) = default;

 private:
  std::map<Mask, Count> terms_;
};

/// Substitutes x_j = q^j, so x_S becomes q^{sum S}.
QPoly specialize(const SubsetPoly& p);

/// Terms ordered by |S| and then lexicographically: "1 + 2x1 + 2x2 + x1x3".
std::string to_string(const SubsetPoly& p);

/// The terms' index sets in the order to_string prints them.
std::vector<IndexSet> ordered_monomials(const SubsetPoly& p);

}  // namespace hookline
