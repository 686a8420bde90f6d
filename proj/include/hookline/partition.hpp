#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hookline/checked.hpp"
#include "hookline/index_set.hpp"
#include "hookline/lattice_path.hpp"

namespace hookline {

/// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws InputError on a non-positive part or an increase.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// i-th part, 1-indexed; 0 beyond the last part.
  int part(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int size() const;
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Comma separated parts, "4,4,3,3,2"; an empty string is the empty partition.
Partition parse_partition(std::string_view text);
std::string to_string(const Partition& p);

/// The box B_n: floor(n/2) rows of ceil(n/2) cells each.
struct BoxSpec {
  int n = 0;
  int width() const { return (n + 1) / 2; }
  int height() const { return n / 2; }
};

bool fits_in(const Partition& p, BoxSpec box);

/// Largest k with part(k) >= k.
int durfee_side(const Partition& p);

/// Hook sizes i_1 < ... < i_k obtained by repeatedly removing the first row
/// and first column; k is the Durfee side and consecutive sizes differ by at
/// least 2.
IndexSet hook_decomposition(const Partition& p);

/// Lower-right boundary of the diagram placed in the top-left of the box, as
/// a Grand Dyck path from (0,0) to (width, height). Column x of the box holds
/// height - y_x cells, y_x the height of the path's E step in that column.
LatticePath boundary_path(const Partition& p, BoxSpec box);
/// Inverse of boundary_path; the box is B_length.
Partition partition_from_boundary(const LatticePath& grand);

/// Area of the box lying above a Grand Dyck path.
int area_above(const LatticePath& grand);

/// Bijection from partitions in B_n to Grand Dyck paths with
/// Peak(psi(p)) = hook_decomposition(p).
LatticePath psi(const Partition& p, BoxSpec box);
Partition psi_inverse(const LatticePath& grand);

void for_each_in_box(BoxSpec box, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_in_box(BoxSpec box);
/// Number of partitions of m inside the box.
Count count_of_size(BoxSpec box, int m);

/// All partitions of m, parts in decreasing lexicographic order.
std::vector<Partition> partitions_of(int m);
/// p(m), by generating the partitions.
Count partition_count(int m);

/// Every partition (no box constraint) whose hook decomposition is `hooks`,
/// built by choosing the bend of each hook from the innermost outward.
/// Throws InputError if `hooks` is not strictly increasing with gaps > 1.
std::vector<Partition> partitions_with_hd(const IndexSet& hooks);
/// i_1 * prod_{j>=2} (i_j - i_{j-1} - 1); 1 for the empty set.
Count hd_class_size(const IndexSet& hooks);
/// Smallest n for which every partition with these hooks fits in B_n:
/// 2 (i_k - k + 1), or 0 for the empty set.
int hd_stable_box(const IndexSet& hooks);

}  // namespace hookline
