#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hookline/harness.hpp"
#include "hookline/lattice_path.hpp"
#include "hookline/partition.hpp"
#include "hookline/tableau.hpp"

namespace hookline {

enum class RenderObject { path, partition, tableau, permutation_chain };
enum class RenderFormat { ascii, svg };

RenderObject parse_render_object(std::string_view name);  // "path", "partition", "tableau", "permutation-chain"
RenderFormat parse_render_format(std::string_view name);  // "ascii", "svg"

struct RenderSpec {
  RenderObject object = RenderObject::path;
  RenderFormat format = RenderFormat::ascii;
  bool peak_labels = true;
  bool hook_shading = true;
  bool box_outline = true;
  /// Box B_n for partitions; defaults to the smallest square box holding it.
  std::optional<int> box;
  /// Maps applied by the permutation-chain object.
  std::vector<std::string> chain = {"rho", "xi", "psi-inv"};
};

// ASCII output is a fixed character grid; SVG output always starts with an
// XML declaration.

std::string render_path(const LatticePath& path, const RenderSpec& spec);
std::string render_partition(const Partition& p, BoxSpec box, const RenderSpec& spec);
std::string render_tableau(const StandardTableau& t, const RenderSpec& spec);
std::string render_chain(const ChainTrace& trace, const RenderSpec& spec);

/// Parses `text` as the object named by spec.object and renders it.
std::string render(const RenderSpec& spec, std::string_view text);

}  // namespace hookline
