#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hookline/checked.hpp"
#include "hookline/index_set.hpp"
#include "hookline/lattice_path.hpp"
#include "hookline/partition.hpp"
#include "hookline/perm_class.hpp"

namespace hookline {

enum class Statistic { des, maj, comaj, descent_set };

std::string_view statistic_name(Statistic s);  // "des", "maj", "comaj", "descent-set"
Statistic parse_statistic(std::string_view name);

struct DistributionRow {
  std::string key;  // statistic value, or a set such as "{2,6}" for descent-set
  Count count = 0;
  std::optional<Count> closed_form;
};

struct DistributionTable {
  PermClass cls;
  Statistic statistic = Statistic::des;
  std::vector<DistributionRow> rows;
  /// Name of the closed form in the closed_form column, empty when none.
  std::string closed_form;
  /// True when a closed form exists and agrees on every row.
  bool matches = false;
};

/// Histogram of the statistic over the class, with the matching closed form
/// alongside when one is known (for I_n(321,213) this is the claimed closed form,
/// which need not match).
DistributionTable distribution(PermClass cls, Statistic statistic, Backend backend = Backend::structural);

using ChainValue = std::variant<Permutation, LatticePath, Partition>;

struct ChainStage {
  std::string map;           // map that produced this value; "input" for the first stage
  ChainValue value;
  std::string kind;          // "permutation", "prefix", "grand", "dyck", "path", "partition"
  std::string statistic_name;  // "Des", "Peak", "Peak∩[n-1]" or "hd"
  IndexSet statistic;
  bool preserves = true;     // whether the map into this stage carries the statistic
};

struct ChainTrace {
  std::vector<ChainStage> stages;
  /// The tracked set is the same across every statistic-preserving map.
  bool statistic_constant = true;
};

/// Map names: rho, rho-inv, xi, xi-inv, psi, psi-inv, boundary, boundary-inv,
/// s321, s321-inv, transpose. `box` fixes B_n for a partition input; later
/// partitions use the length of the path they came from. Throws InputError
/// when a stage's precondition fails.
ChainTrace map_chain(const ChainValue& input, const std::vector<std::string>& chain,
                     std::optional<int> box = std::nullopt);

std::vector<std::string> split_chain(std::string_view text);  // "rho,xi,psi-inv"

std::string to_string(const ChainValue& v);

}  // namespace hookline
