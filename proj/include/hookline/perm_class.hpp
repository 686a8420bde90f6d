#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hookline/permutation.hpp"

namespace hookline {

enum class ClassTag { all, involutions, i321, i123, i321_312, i321_213, s321 };

/// One of the named permutation sets S_n, I_n, I_n(321), I_n(123),
/// I_n(321,312), I_n(321,213), S_n(321).
struct PermClass {
  ClassTag tag = ClassTag::all;
  int n = 0;
};

/// "all", "involutions", "i321", "i123", "i321-312", "i321-213", "s321".
std::string_view class_name(ClassTag tag);
/// Inverse of class_name; also accepts "inv" and '_' for '-'.
ClassTag parse_class(std::string_view name);

/// Membership predicate built from is_involution and the naive avoids().
bool contains(ClassTag tag, const Permutation& p);

enum class Backend { brute, structural };

/// The brute backend filters all n! permutations.
inline constexpr int kBruteForceMaxN = 10;
/// Default cap on the number of members any structural stream may yield.
inline constexpr std::int64_t kStructuralLimit = 50'000'000;

/// Streams each member of the class exactly once. The structural backend
/// builds members from their combinatorial encodings (prefixes for I_n(321)
/// and I_n(123), Dyck paths for S_n(321), matchings for I_n, blocks 1/21 for
/// I_n(321,312)). Throws ResourceLimitError past the configured bounds.
void for_each_member(PermClass cls, Backend backend,
                     const std::function<void(const Permutation&)>& visit,
                     std::int64_t limit = kStructuralLimit);

/// Members in lexicographic order.
std::vector<Permutation> enumerate(PermClass cls, Backend backend = Backend::structural,
                                   std::int64_t limit = kStructuralLimit);

/// Cardinality predicted from the class's counting sequence, when known
/// without enumeration (binomial, Catalan, involution numbers, Fibonacci).
std::optional<std::int64_t> expected_class_size(PermClass cls);

}  // namespace hookline
