#include <doctest.h>

#include <algorithm>
#include <set>

#include "hookline/checked.hpp"
#include "hookline/error.hpp"
#include "hookline/lattice_path.hpp"
#include "hookline/perm_class.hpp"
#include "hookline/tableau.hpp"

using namespace hookline;

namespace {

LatticePath L(std::string_view s) { return parse_path(s); }
Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

const LatticePath kXiLeft = L("NNEENNENNEENNNEN");
const LatticePath kXiRight = L("NNEEENENNEEENNEN");

}  // namespace

TEST_CASE("parsing") {
  CHECK(to_string(L("nnee")) == "NNEE");
  CHECK(L("URUR") == L("NENE"));
  CHECK(L("N E") == L("NE"));
  CHECK_THROWS_AS(L("NX"), InputError);
}

TEST_CASE("classify") {
  const PathKind k = classify(kXiLeft);
  CHECK(k.is_prefix);
  CHECK_FALSE(k.is_grand);
  CHECK(kXiLeft.endpoint() == std::pair{6, 10});
  CHECK(classify(LatticePath{}) == PathKind{true, true, true});
  CHECK(classify(L("EN")).is_grand);
  CHECK_FALSE(classify(L("EN")).is_prefix);
  CHECK(classify(L("NNEE")).is_dyck);
}

TEST_CASE("peaks") {
  CHECK(peak_set(kXiLeft) == IndexSet{2, 6, 9, 14});
  CHECK(peak_set(kXiRight) == IndexSet{2, 6, 9, 14});
  CHECK(peak_set(L("EEEE")).empty());
  CHECK(peak_set(L("NE")) == IndexSet{1});
}

TEST_CASE("step matching") {
  const auto ne = match_steps(L("NE"));
  CHECK(ne.pairs == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(ne.unmatched.empty());
  CHECK(match_steps(kXiLeft).unmatched == IndexSet{5, 12, 13, 16});
  CHECK(match_steps(L("EN")).unmatched == IndexSet{1, 2});
}

TEST_CASE("xi") {
  CHECK(xi(kXiLeft) == kXiRight);
  CHECK(xi(L("NNENEE")) == L("NNENEE"));
  CHECK(xi(L("N")) == L("E"));
  CHECK(xi_inverse(kXiRight) == kXiLeft);
  CHECK(xi_inverse(L("NENE")) == L("NENE"));
  CHECK(xi_inverse(L("E")) == L("N"));
  CHECK_THROWS_AS(xi(L("EN")), InputError);
  CHECK_THROWS_AS(xi_inverse(L("NNNE")), InputError);
}

TEST_CASE("rho") {
  const Permutation fig = P({3, 4, 1, 2, 7, 9, 5, 10, 6, 8, 11, 12});
  CHECK(rho(fig) == L("NNEENNENEENN"));
  CHECK(rho(Permutation::identity(5)) == L("NNNNN"));
  CHECK(rho(P({2, 1})) == L("NE"));
  CHECK(rho_inverse(L("NNEENNENEENN")) == fig);
  CHECK(rho_inverse(L("NNNN")) == Permutation::identity(4));
  CHECK(rho_inverse(L("NE")) == P({2, 1}));
  CHECK_THROWS_AS(rho(P({3, 2, 1})), InputError);
  CHECK_THROWS_AS(rho(P({2, 3, 1})), InputError);
}

TEST_CASE("S_n(321) and Dyck paths") {
  CHECK(s321_to_dyck(Permutation::identity(3)) == L("NNNEEE"));
  CHECK(s321_to_dyck(P({2, 3, 1})) == L("NNEENE"));
  CHECK(dyck_to_s321(L("NNNEEE")) == Permutation::identity(3));
  CHECK(dyck_to_s321(L("NNEENE")) == P({2, 3, 1}));
  CHECK(reflect(L("NNE")) == L("NEE"));
  for (const auto& p : enumerate({ClassTag::s321, 3})) CHECK(dyck_to_s321(s321_to_dyck(p)) == p);

  std::vector<Permutation> images;
  for (const auto& d : enumerate_paths(PathFamily::dyck, 4)) images.push_back(dyck_to_s321(d));
  std::sort(images.begin(), images.end());
  CHECK(images == enumerate({ClassTag::s321, 4}));
}

TEST_CASE("path family sizes") {
  CHECK(enumerate_paths(PathFamily::prefix, 4).size() == 6);
  CHECK(enumerate_paths(PathFamily::grand, 4).size() == 6);
  CHECK(enumerate_paths(PathFamily::dyck, 3).size() == 5);
  for (int n = 0; n <= 12; ++n) {
    CHECK(path_family_size(PathFamily::prefix, n) == binomial(n, n / 2));
    CHECK(path_family_size(PathFamily::grand, n) == binomial(n, n / 2));
  }
}

// Properties

TEST_CASE("xi is a peak-preserving bijection P_n -> G_n, n <= 14") {
  for (int n = 0; n <= 14; ++n) {
    std::set<LatticePath> images;
    for_each_path(PathFamily::prefix, n, [&](const LatticePath& p) {
      const LatticePath g = xi(p);
      REQUIRE(classify(g).is_grand);
      REQUIRE(xi_inverse(g) == p);
      REQUIRE(peak_set(g) == peak_set(p));
      images.insert(g);
    });
    CHECK(static_cast<std::int64_t>(images.size()) == path_family_size(PathFamily::grand, n));
  }
}

TEST_CASE("unmatched steps of a prefix are N steps") {
  for (int n = 0; n <= 12; ++n)
    for_each_path(PathFamily::prefix, n, [](const LatticePath& p) {
      for (int i : match_steps(p).unmatched) REQUIRE(p.step(i) == Step::N);
    });
}

TEST_CASE("G_n paths by peak count") {
  for (int n = 0; n <= 14; ++n) {
    std::vector<Count> by_peaks(static_cast<std::size_t>(n + 1), 0);
    for_each_path(PathFamily::grand, n, [&](const LatticePath& g) { ++by_peaks[peak_set(g).size()]; });
    for (int k = 0; k <= n; ++k) REQUIRE(by_peaks[static_cast<std::size_t>(k)] == binomial((n + 1) / 2, k) * binomial(n / 2, k));
  }
}

TEST_CASE("rho round trip and Des = Peak, n <= 12") {
  for (int n = 0; n <= 12; ++n)
    for_each_member({ClassTag::i321, n}, Backend::structural, [](const Permutation& p) {
      const LatticePath path = rho(p);
      REQUIRE(classify(path).is_prefix);
      REQUIRE(rho_inverse(path) == p);
      REQUIRE(descent_set(p) == peak_set(path));
    });
}

TEST_CASE("Dyck image keeps Des in its first half, n <= 8") {
  for (int n = 0; n <= 8; ++n)
    for_each_member({ClassTag::s321, n}, Backend::brute, [n](const Permutation& p) {
      const LatticePath d = s321_to_dyck(p);
      REQUIRE(classify(d).is_dyck);
      REQUIRE(d.length() == 2 * n);
      IndexSet first_half;
      for (int j : peak_set(d))
        if (j <= n - 1) first_half.push_back(j);
      REQUIRE(first_half == descent_set(p));
      REQUIRE(set_sum(first_half) == maj(p));
      REQUIRE(dyck_to_s321(d) == p);
    });
}
