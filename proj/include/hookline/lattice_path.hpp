#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hookline/index_set.hpp"
#include "hookline/permutation.hpp"
#include "hookline/tableau.hpp"

namespace hookline {

enum class Step : char { N = 'N', E = 'E' };

/// A lattice path from the origin with unit steps N = (0,1) and E = (1,0).
/// Steps are numbered 1..length; vertex i sits between steps i and i+1, so
/// vertex labels run 0..length.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  int length() const { return static_cast<int>(steps_.size()); }
  Step step(int i) const { return steps_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Step>& steps() const { return steps_; }

  int east_count() const;
  int north_count() const;
  /// (#E, #N)
  std::pair<int, int> endpoint() const { return {east_count(), north_count()}; }
  /// Coordinates of vertex i.
  std::pair<int, int> vertex(int i) const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
};

/// Accepts 'N'/'E' and the aliases 'U'/'R' (either case); whitespace ignored.
LatticePath parse_path(std::string_view text);
std::string to_string(const LatticePath& path);

struct PathKind {
  bool is_prefix = false;  // never below y = x
  bool is_grand = false;   // ends at (ceil(len/2), floor(len/2))
  bool is_dyck = false;    // prefix ending on y = x

  friend bool operator==(const PathKind&, const PathKind&) = default;
};

PathKind classify(const LatticePath& path);

/// Labels of vertices between an N step and the E step following it.
IndexSet peak_set(const LatticePath& path);

/// Parenthesis matching with N as opener and E as closer.
struct StepMatching {
  std::vector<std::pair<int, int>> pairs;  // (N index, E index), sorted by E index
  IndexSet unmatched;
};

StepMatching match_steps(const LatticePath& path);

/// Dyck path prefix -> Grand Dyck path of the same length: flips the first
/// ceil(j/2) of the j unmatched N steps into E steps. Peak set is preserved.
LatticePath xi(const LatticePath& prefix);
/// Grand Dyck path -> prefix: turns every unmatched E into N.
LatticePath xi_inverse(const LatticePath& grand);

/// Two-row standard tableau <-> Dyck path prefix: step i is N when i is in
/// the first row, E when in the second.
LatticePath prefix_from_tableau(const StandardTableau& t);
StandardTableau tableau_from_prefix(const LatticePath& prefix);

/// 321-avoiding involution -> Dyck path prefix through its RS tableau.
LatticePath rho(const Permutation& p);
Permutation rho_inverse(const LatticePath& prefix);

/// Reverses the word and swaps N with E (reflection through the antidiagonal).
LatticePath reflect(const LatticePath& path);

/// 321-avoiding permutation -> Dyck path of length 2n: the recording-tableau
/// prefix followed by the reflection of the insertion-tableau prefix.
LatticePath s321_to_dyck(const Permutation& p);
Permutation dyck_to_s321(const LatticePath& dyck);

enum class PathFamily { prefix, grand, dyck };

/// Default upper bound on the number of paths an enumeration may produce.
inline constexpr std::int64_t kPathEnumerationLimit = 50'000'000;

/// Every path of the family exactly once, in lexicographic order with N < E.
/// `n` is the length for prefix and grand, the semilength for dyck (the sets
/// P_n, G_n, D_n). Throws ResourceLimitError when the family is larger than
/// `limit`.
void for_each_path(PathFamily family, int n, const std::function<void(const LatticePath&)>& visit,
                   std::int64_t limit = kPathEnumerationLimit);
std::vector<LatticePath> enumerate_paths(PathFamily family, int n,
                                         std::int64_t limit = kPathEnumerationLimit);
std::int64_t path_family_size(PathFamily family, int n);

}  // namespace hookline
