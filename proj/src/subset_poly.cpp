#include "hookline/subset_poly.hpp"

#include <algorithm>
#include <sstream>

#include "hookline/error.hpp"

namespace hookline {

SubsetPoly SubsetPoly::constant(Count c) {
  SubsetPoly p;
  p.add_term(0, c);
  return p;
}

SubsetPoly SubsetPoly::monomial(const IndexSet& s, Count c) {
  SubsetPoly p;
  p.add_term(to_mask(s), c);
  return p;
}

Count SubsetPoly::coeff(const IndexSet& s) const { return coeff_mask(to_mask(s)); }

Count SubsetPoly::coeff_mask(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void SubsetPoly::add_term(Mask m, Count c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = checked::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

SubsetPoly SubsetPoly::times_shifted_variable(int j) const {
  const Mask bit = Mask{1} << (j - 1);
  SubsetPoly r;
  for (auto [m, c] : terms_) {
    if (m & bit) throw Error("product would not be squarefree in x_" + std::to_string(j));
    r.add_term(m | bit, c);
    r.add_term(m, checked::sub(0, c));
  }
  return r;
}

SubsetPoly& SubsetPoly::operator+=(const SubsetPoly& o) {
  for (auto [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SubsetPoly& SubsetPoly::operator-=(const SubsetPoly& o) {
  for (auto [m, c] : o.terms_) add_term(m, checked::sub(0, c));
  return *this;
}

SubsetPoly SubsetPoly::scaled(Count c) const {
  SubsetPoly r;
  for (auto [m, v] : terms_) r.add_term(m, checked::mul(v, c));
  return r;
}

QPoly specialize(const SubsetPoly& p) {
  QPoly r;
  for (auto [m, c] : p.terms()) r += QPoly::monomial(set_sum(from_mask(m)), c);
  return r;
}

std::vector<IndexSet> ordered_monomials(const SubsetPoly& p) {
  std::vector<IndexSet> sets;
  for (const auto& term : p.terms()) sets.push_back(from_mask(term.first));
  std::sort(sets.begin(), sets.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return sets;
}

std::string to_string(const SubsetPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const IndexSet& s : ordered_monomials(p)) {
    const Count c = p.coeff(s);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Count mag = c < 0 ? -c : c;
    if (s.empty() || mag != 1) out << mag;
    for (int j : s) out << 'x' << j;
  }
  return out.str();
}

}  // namespace hookline
