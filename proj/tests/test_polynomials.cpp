#include <doctest.h>

#include "hookline/checked.hpp"
#include "hookline/closed_forms.hpp"
#include "hookline/error.hpp"
#include "hookline/ground_truth.hpp"
#include "hookline/partition.hpp"
#include "hookline/perm_class.hpp"

using namespace hookline;

namespace {

QPoly Q(std::vector<Count> c) { return QPoly(std::move(c)); }

SubsetPoly X(std::initializer_list<std::pair<IndexSet, Count>> terms) {
  SubsetPoly p;
  for (const auto& [s, c] : terms) p += SubsetPoly::monomial(s, c);
  return p;
}

// Gaussian binomial by the Pascal-type recurrence [n,j] = [n-1,j-1] + q^j [n-1,j].
QPoly gauss_pascal(int n, int j) {
  if (j < 0 || j > n) return QPoly{};
  if (j == 0 || j == n) return QPoly::constant(1);
  return gauss_pascal(n - 1, j - 1) + gauss_pascal(n - 1, j).shifted(j);
}

}  // namespace

TEST_CASE("QPoly arithmetic") {
  CHECK(Q({1, 2, 0, 0}).degree() == 1);
  CHECK(Q({0}).is_zero());
  CHECK(Q({1, 1}) * Q({1, 1}) == Q({1, 2, 1}));
  CHECK(Q({1, 1}) - Q({1, 1}) == QPoly{});
  CHECK(exact_divide(Q({1, 0, -1}), Q({1, -1})) == Q({1, 1}));
  CHECK_THROWS_AS(exact_divide(Q({1, 0, 1}), Q({1, -1})), Error);
  CHECK(series_inverse(Q({1, -1}), 4) == Q({1, 1, 1, 1, 1}));
  CHECK(to_string(Q({1, 1, 2, 1, 1})) == "1 + q + 2q^2 + q^3 + q^4");
  CHECK(to_string(QPoly{}) == "0");
  CHECK(to_string(Q({0, -1, 3})) == "-q + 3q^2");
  CHECK_THROWS_AS(Q({INT64_MAX}) + Q({1}), OverflowError);
  CHECK_THROWS_AS(Q({INT64_MAX / 2 + 1}) * Q({2}), OverflowError);
}

TEST_CASE("checked integers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(66, 33) == 7219428434016265740LL);
  CHECK_THROWS_AS(binomial(70, 35), OverflowError);
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(catalan(-1) == 0);
  CHECK(catalan(35) == 3116285494907301262LL);
  CHECK_THROWS_AS(catalan(40), OverflowError);
}

TEST_CASE("q-binomial") {
  CHECK(q_binomial(4, 2) == Q({1, 1, 2, 1, 1}));
  for (int n = 0; n <= 6; ++n) CHECK(q_binomial(n, 0) == QPoly::constant(1));
  CHECK(q_binomial(5, 2) == q_binomial(5, 3));
  CHECK(q_binomial(3, 5) == QPoly{});
  CHECK_THROWS_AS(q_binomial(-1, 0), InputError);
}

TEST_CASE("descent counts") {
  CHECK(des_count_formula(4, 1) == 4);
  for (int n = 0; n <= 8; ++n) CHECK(des_count_formula(n, 0) == 1);
  CHECK(des_count_formula(5, 0) + des_count_formula(5, 1) + des_count_formula(5, 2) == 10);
}

TEST_CASE("joint des/maj") {
  CHECK(joint_des_maj(4, 0) == QPoly::constant(1));
  CHECK(joint_des_maj(4, 1) == Q({0, 1, 2, 1}));
  CHECK(joint_des_maj(4, 2) == QPoly::monomial(4));
  CHECK(joint_des_maj(4, 0) + joint_des_maj(4, 1) + joint_des_maj(4, 2) == q_binomial(4, 2));
  CHECK(joint_des_maj(4, 3) == QPoly{});
}

TEST_CASE("maj polynomials by enumeration") {
  CHECK(maj_poly({ClassTag::i321, 4}) == Q({1, 1, 2, 1, 1}));
  CHECK(maj_poly({ClassTag::i123, 4}, MajorStatistic::comaj) == Q({1, 1, 2, 1, 1}));
  CHECK(maj_poly({ClassTag::i321, 1}) == QPoly::constant(1));
}

TEST_CASE("Fibonacci polynomials") {
  CHECK(fibonacci_maj(0) == QPoly::constant(1));
  CHECK(fibonacci_maj(1) == QPoly::constant(1));
  CHECK(fibonacci_maj(3) == Q({1, 1, 1}));
  const Count fib[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  for (int n = 0; n < 10; ++n) {
    CHECK(fibonacci_maj(n).total() == fib[n]);
    Count row = 0;
    for (Count c : fibonacci_des_counts(n)) row += c;
    CHECK(row == fib[n]);
  }
  CHECK(fibonacci_des_counts(4) == std::vector<Count>{1, 3, 1});
  CHECK(fibonacci_des_counts(0) == std::vector<Count>{1});
}

TEST_CASE("double avoidance with 213") {
  CHECK(double213_claim(3) == Q({1, 1, 1}));
  CHECK(double213_enumerated(3) == Q({1, 0, 1}));
  CHECK(double213_enumerated(4) == Q({1, 0, 1, 1}));
  CHECK(double213_enumerated(4, Backend::brute) == Q({1, 0, 1, 1}));
  CHECK(double213_claim(3) != double213_enumerated(3));
}

TEST_CASE("S_n(321) descent sets") {
  CHECK(superset_count(4, {2}) == 5);
  CHECK(superset_count(4, {1, 2}) == 0);
  CHECK(superset_count(3, {1}) == 2);
  CHECK(exact_descent_count(4, {1}) == 3);
  CHECK(exact_descent_count(4, {1, 3}) == 2);
  CHECK(exact_descent_count(6, {2, 3}) == 0);
  CHECK_THROWS_AS(superset_count(3, {3}), InputError);
}

TEST_CASE("A polynomials") {
  const SubsetPoly a33 = X({{{}, 1}, {{1}, 2}, {{2}, 2}});
  CHECK(a_poly(3, 3, APolyMethod::recurrence) == a33);
  CHECK(a_poly(3, 3, APolyMethod::direct) == a33);
  for (int n = 2; n <= 6; ++n) CHECK(a_poly(n, 0, APolyMethod::recurrence) == SubsetPoly::constant(1));
  for (int m = 0; m <= 6; ++m) {
    CHECK(a_poly(1, m, APolyMethod::recurrence) == SubsetPoly::constant(catalan(m)));
    CHECK(a_poly(0, m, APolyMethod::recurrence) == SubsetPoly::constant(catalan(m)));
  }
  CHECK(to_string(a33) == "1 + 2x1 + 2x2");
}

TEST_CASE("descent set polynomials by enumeration") {
  CHECK(descent_set_poly({ClassTag::s321, 3}) == X({{{}, 1}, {{1}, 2}, {{2}, 2}}));
  CHECK(descent_set_poly({ClassTag::i321, 4}) == X({{{}, 1}, {{1}, 1}, {{2}, 2}, {{3}, 1}, {{1, 3}, 1}}));
  CHECK(descent_set_poly({ClassTag::s321, 1}) == SubsetPoly::constant(1));
}

TEST_CASE("specialization") {
  CHECK(specialize(X({{{}, 1}, {{1}, 2}, {{2}, 2}})) == Q({1, 2, 2}));
  CHECK(specialize(SubsetPoly::constant(1)) == QPoly::constant(1));
  CHECK(specialize(descent_set_poly({ClassTag::i321, 4})) == q_binomial(4, 2));
}

TEST_CASE("limit series") {
  CHECK(limit_joint_series(0, 5) == QPoly::constant(1));
  CHECK(limit_joint_series(1, 3) == Q({0, 1, 2, 3}));
  CHECK(limit_hd_coefficient({2, 6, 8}) == 6);
  CHECK(limit_hd_coefficient({}) == 1);
}

// Properties

TEST_CASE("q-binomial agrees with the Pascal recurrence and at q = 1") {
  for (int n = 0; n <= 20; ++n)
    for (int j = 0; j <= n; ++j) {
      const QPoly g = q_binomial(n, j);
      if (n <= 14) REQUIRE(g == gauss_pascal(n, j));
      REQUIRE(g.total() == binomial(n, j));
    }
}

TEST_CASE("maj over I_n(321) and comaj over I_n(123), n <= 12") {
  for (int n = 0; n <= 12; ++n) {
    const QPoly central = q_binomial(n, n / 2);
    CHECK(maj_poly({ClassTag::i321, n}) == central);
    CHECK(maj_poly({ClassTag::i123, n}, MajorStatistic::comaj) == central);
  }
}

TEST_CASE("joint summands match restricted enumeration, n <= 12") {
  for (int n = 0; n <= 12; ++n) {
    QPoly sum;
    for (int k = 0; k <= n / 2; ++k) {
      const QPoly j = joint_des_maj(n, k);
      CHECK(j == maj_poly_with_des({ClassTag::i321, n}, k));
      sum += j;
    }
    CHECK(sum == q_binomial(n, n / 2));
  }
}

TEST_CASE("A_{n,n}, inclusion-exclusion and supersets, n <= 10") {
  for (int n = 0; n <= 10; ++n) {
    const SubsetPoly enumerated = descent_set_poly({ClassTag::s321, n});
    CHECK(a_poly(n, n, APolyMethod::recurrence) == enumerated);
    CHECK(a_poly(n, n, APolyMethod::direct) == enumerated);
    CHECK(specialize(enumerated) == maj_poly({ClassTag::s321, n}));
    for (SubsetPoly::Mask s = 0; s < (SubsetPoly::Mask{1} << std::max(n - 1, 0)); ++s) {
      const IndexSet set = from_mask(s);
      REQUIRE(exact_descent_count(n, set) == enumerated.coeff_mask(s));
      Count above = 0;
      for (auto [m, c] : enumerated.terms())
        if ((m & s) == s) above += c;
      REQUIRE(superset_count(n, set) == above);
    }
  }
}

TEST_CASE("I_n(321,312): maj and descents, n <= 12") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(fibonacci_maj(n) == maj_poly({ClassTag::i321_312, n}));
    const auto counts = fibonacci_des_counts(n);
    const auto hist = des_histogram({ClassTag::i321_312, n});
    for (int k = 0; k <= n; ++k) {
      const Count expected = binomial(n - k, k);
      CHECK((k < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(k)] : 0) == expected);
      CHECK((k < static_cast<int>(hist.size()) ? hist[static_cast<std::size_t>(k)] : 0) == expected);
    }
  }
}

TEST_CASE("joint series stabilizes, k <= 3, m <= 10") {
  for (int k = 0; k <= 3; ++k) {
    const QPoly limit = limit_joint_series(k, 10);
    for (int m = 0; m <= 10; ++m)
      for (int n = 2 * m; n <= 2 * m + 6; ++n) {
        CAPTURE(k);
        CAPTURE(m);
        CAPTURE(n);
        REQUIRE(joint_des_maj(n, k).coeff(m) == limit.coeff(m));
      }
  }
}

TEST_CASE("limit hd coefficient equals the hd class size") {
  for (const IndexSet& s : sparse_subsets(10)) REQUIRE(limit_hd_coefficient(s) == hd_class_size(s));
}
