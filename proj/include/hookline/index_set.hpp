#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hookline {

/// Finite set of positive integers kept as a strictly increasing vector.
/// Descent sets, peak sets and hook decompositions all use this form.
using IndexSet = std::vector<int>;

/// "{2,6,8}"; "{}" for the empty set.
std::string format_set(const IndexSet& s);

/// Accepts "2,6,8", "{2,6,8}" or "2 6 8"; sorts and rejects duplicates and
/// non-positive entries with InputError.
IndexSet parse_index_set(std::string_view text);

int set_sum(const IndexSet& s);

/// True when some j and j+1 both belong to s.
bool has_consecutive(const IndexSet& s);

/// Bit j-1 set for every j in s. Elements must lie in 1..64.
std::uint64_t to_mask(const IndexSet& s);
IndexSet from_mask(std::uint64_t mask);

/// All subsets of {1, ..., bound} without two consecutive elements, in
/// increasing mask order.
std::vector<IndexSet> sparse_subsets(int bound);

}  // namespace hookline
