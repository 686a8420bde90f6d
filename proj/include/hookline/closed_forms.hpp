#pragma once

#include <vector>

#include "hookline/checked.hpp"
#include "hookline/index_set.hpp"
#include "hookline/qpoly.hpp"
#include "hookline/subset_poly.hpp"

namespace hookline {

/// Gaussian binomial [n choose j]_q as the exact quotient of
/// (1-q^n)...(1-q^{n-j+1}) by (1-q^j)...(1-q). Zero for j > n; throws
/// InputError for negative arguments.
QPoly q_binomial(int n, int j);

/// Number of 321-avoiding involutions of size n with k descents:
/// C(ceil(n/2), k) * C(floor(n/2), k).
Count des_count_formula(int n, int k);

/// q^{k^2} [ceil(n/2) choose k]_q [floor(n/2) choose k]_q; the zero
/// polynomial once k > floor(n/2).
QPoly joint_des_maj(int n, int k);

/// p_n(q) = p_{n-1}(q) + q^{n-1} p_{n-2}(q), p_0 = p_1 = 1.
QPoly fibonacci_maj(int n);

/// Coefficients of t^k x^n in 1/(1 - x - t x^2), indexed by k.
std::vector<Count> fibonacci_des_counts(int n);

/// The closed form (1 - q^n)/(1 - q) asserted for I_n(321,213).
QPoly double213_claim(int n);

/// #{p in S_n(321) : Des(p) contains s}: C_{n-|s|}, or 0 when s has two
/// consecutive elements. s must lie in [n-1].
Count superset_count(int n, const IndexSet& s);

/// #{p in S_n(321) : Des(p) = s} by inclusion-exclusion over the supersets
/// of s in [n-1] without consecutive elements.
Count exact_descent_count(int n, const IndexSet& s);

enum class APolyMethod { recurrence, direct };

/// A_{n,m}(x) = sum_T C_{m-|T|} prod_{j in T} (x_j - 1), T over the subsets
/// of [n-1] without consecutive elements (C of a negative index is 0).
SubsetPoly a_poly(int n, int m, APolyMethod method);

/// q^{k^2} / ((1-q)(1-q^2)...(1-q^k))^2 truncated at q^order.
QPoly limit_joint_series(int k, int order);

/// Coefficient of x_1^{i_1} ... x_k^{i_k} in the Durfee-side-k generating
/// function x_1 x_2^3 ... x_k^{2k-1} / prod_j (1 - x_j ... x_k)^2, read off
/// factor by factor.
Count limit_hd_coefficient(const IndexSet& hooks);

}  // namespace hookline
