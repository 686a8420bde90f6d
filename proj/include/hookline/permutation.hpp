#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hookline/index_set.hpp"

namespace hookline {

/// A permutation of {1, ..., n} in one-line notation. Positions are 1-indexed
/// in the public interface; n = 0 is the empty permutation.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InputError unless `entries` is a bijection onto 1..entries.size().
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  /// n n-1 ... 1
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  /// Value at 1-indexed position i.
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> entries() const { return entries_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<int> entries, Trusted) : entries_(std::move(entries)) {}
  friend Permutation from_trusted(std::vector<int> entries);

  std::vector<int> entries_;
};

/// Skips validation; for generators that build bijections by construction.
Permutation from_trusted(std::vector<int> entries);

/// Accepts integers separated by whitespace and/or commas, e.g. "3 4 1 2" or
/// "3,4,1,2". Throws InputError on a non-integer token, an out-of-range value
/// or a repeated value.
Permutation parse_permutation(std::string_view text);

/// Space separated one-line notation, e.g. "3 4 1 2".
std::string to_string(const Permutation& p);

struct DescentProfile {
  IndexSet descent_set;
  IndexSet ascent_set;
  int maj = 0;
  int comaj = 0;
};

IndexSet descent_set(const Permutation& p);
IndexSet ascent_set(const Permutation& p);
int maj(const Permutation& p);
int comaj(const Permutation& p);
DescentProfile descent_profile(const Permutation& p);

bool is_involution(const Permutation& p);

/// Naive order-isomorphic subsequence search, O(n^|pattern|).
bool avoids(const Permutation& p, const Permutation& pattern);

/// Linear-time 321 test: the entries that are not left-to-right maxima must
/// form an increasing sequence.
bool avoids_321(const Permutation& p);

/// Positions i with p(i) < p(j) for all j < i.
IndexSet left_to_right_minima(const Permutation& p);

enum class FibonacciBlock { single, pair };  // blocks "1" and "21"

/// Decomposition of p as a direct sum of 1's and 21's. Throws InputError
/// (not a Fibonacci permutation) when no such decomposition exists.
std::vector<FibonacciBlock> fibonacci_blocks(const Permutation& p);
bool is_fibonacci(const Permutation& p);

}  // namespace hookline
