#include "hookline/closed_forms.hpp"

#include <map>
#include <utility>

#include "hookline/error.hpp"

namespace hookline {

QPoly q_binomial(int n, int j) {
  if (n < 0 || j < 0) throw InputError("q_binomial needs non-negative arguments");
  if (j > n) return {};
  QPoly num = QPoly::constant(1), den = QPoly::constant(1);
  for (int i = 0; i < j; ++i) {
    num *= one_minus_q_pow(n - i);
    den *= one_minus_q_pow(i + 1);
  }
  return exact_divide(num, den);
}

Count des_count_formula(int n, int k) {
  return checked::mul(binomial((n + 1) / 2, k), binomial(n / 2, k));
}

QPoly joint_des_maj(int n, int k) {
  if (k < 0 || k > n / 2) return {};
  return (q_binomial((n + 1) / 2, k) * q_binomial(n / 2, k)).shifted(k * k);
}

QPoly fibonacci_maj(int n) {
  QPoly prev = QPoly::constant(1), cur = QPoly::constant(1);  // p_0, p_1
  if (n <= 1) return cur;
  for (int k = 2; k <= n; ++k) {
    QPoly next = cur + prev.shifted(k - 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Count> fibonacci_des_counts(int n) {
  // F_n(t) = F_{n-1}(t) + t F_{n-2}(t) with F_0 = F_1 = 1; reuse QPoly in t.
  QPoly prev = QPoly::constant(1), cur = QPoly::constant(1);
  for (int k = 2; k <= n; ++k) {
    QPoly next = cur + prev.shifted(1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.coeffs();
}

QPoly double213_claim(int n) {
  if (n < 1) throw InputError("double213_claim needs n >= 1");
  return exact_divide(one_minus_q_pow(n), one_minus_q_pow(1));
}

namespace {

void check_subset(int n, const IndexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n - 1)
      throw InputError("set " + format_set(s) + " is not contained in [" + std::to_string(n - 1) + "]");
    if (i > 0 && s[i] <= s[i - 1]) throw InputError("set elements must be strictly increasing");
  }
}

}  // namespace

Count superset_count(int n, const IndexSet& s) {
  check_subset(n, s);
  if (has_consecutive(s)) return 0;
  return catalan(n - static_cast<int>(s.size()));
}

Count exact_descent_count(int n, const IndexSet& s) {
  check_subset(n, s);
  if (has_consecutive(s)) return 0;
  const auto base = to_mask(s);
  Count total = 0;
  for (const IndexSet& t : sparse_subsets(n - 1)) {
    if ((to_mask(t) & base) != base) continue;
    const Count term = catalan(n - static_cast<int>(t.size()));
    total = (t.size() - s.size()) % 2 ? checked::sub(total, term) : checked::add(total, term);
  }
  return total;
}

namespace {

SubsetPoly a_poly_direct(int n, int m) {
  SubsetPoly total;
  for (const IndexSet& t : sparse_subsets(n - 1)) {
    const int size = static_cast<int>(t.size());
    if (size > m) continue;
    SubsetPoly term = SubsetPoly::constant(catalan(m - size));
    for (int j : t) term = term.times_shifted_variable(j);
    total += term;
  }
  return total;
}

SubsetPoly a_poly_recurrence(int n, int m, std::map<std::pair<int, int>, SubsetPoly>& memo) {
  if (n <= 1) return SubsetPoly::constant(catalan(m));
  if (m == 0) return SubsetPoly::constant(1);
  auto it = memo.find({n, m});
  if (it != memo.end()) return it->second;
  SubsetPoly r = a_poly_recurrence(n - 2, m - 1, memo).times_shifted_variable(n - 1) +
                 a_poly_recurrence(n - 1, m, memo);
  memo.emplace(std::pair{n, m}, r);
  return r;
}

}  // namespace

SubsetPoly a_poly(int n, int m, APolyMethod method) {
  if (n < 0 || m < 0) throw InputError("a_poly needs n, m >= 0");
  if (n > 65) throw InputError("a_poly supports at most 64 variables");
  if (method == APolyMethod::direct) return a_poly_direct(n, m);
  std::map<std::pair<int, int>, SubsetPoly> memo;
  return a_poly_recurrence(n, m, memo);
}

QPoly limit_joint_series(int k, int order) {
  if (k < 0) throw InputError("limit_joint_series needs k >= 0");
  QPoly den = QPoly::constant(1);
  for (int i = 1; i <= k; ++i) {
    den = truncated_product(den, one_minus_q_pow(i), order);
    den = truncated_product(den, one_minus_q_pow(i), order);
  }
  return truncated_product(QPoly::monomial(k * k), series_inverse(den, order), order);
}

Count limit_hd_coefficient(const IndexSet& hooks) {
  // The numerator fixes exponent 2j-1 on x_j; the factor 1/(1 - x_j...x_k)^2
  // contributes (c_j + 1)(x_j...x_k)^{c_j}. Matching exponents e_j = i_j
  // forces c_1 = e_1 - 1 and c_j = e_j - e_{j-1} - 2.
  Count coefficient = 1;
  for (std::size_t j = 0; j < hooks.size(); ++j) {
    const int c = j == 0 ? hooks[0] - 1 : hooks[j] - hooks[j - 1] - 2;
    if (c < 0) return 0;
    coefficient = checked::mul(coefficient, c + 1);
  }
  return coefficient;
}

}  // namespace hookline
