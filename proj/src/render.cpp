#include "hookline/render.hpp"

#include <algorithm>
#include <sstream>

#include "hookline/error.hpp"

namespace hookline {

RenderObject parse_render_object(std::string_view name) {
  if (name == "path") return RenderObject::path;
  if (name == "partition") return RenderObject::partition;
  if (name == "tableau") return RenderObject::tableau;
  if (name == "permutation-chain" || name == "chain") return RenderObject::permutation_chain;
  throw InputError("unknown render object '" + std::string(name) + "'");
}

RenderFormat parse_render_format(std::string_view name) {
  if (name == "ascii") return RenderFormat::ascii;
  if (name == "svg") return RenderFormat::svg;
  throw InputError("unknown render format '" + std::string(name) + "'");
}

namespace {

constexpr int kCell = 30;
constexpr int kMargin = 20;
const char* const kHookColors[] = {"#f7e463", "#a9c4f5", "#a8e6a3", "#f2a7a7", "#d7b4f3", "#f7c58b"};

std::string svg_header(int width, int height) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  return out.str();
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> vertices(const LatticePath& path) {
  std::vector<std::pair<int, int>> v{{0, 0}};
  for (Step st : path.steps()) {
    auto [x, y] = v.back();
    v.emplace_back(st == Step::E ? x + 1 : x, st == Step::N ? y + 1 : y);
  }
  return v;
}

// Hook (1-based peel order) owning cell (r, c), 1-based; the j-th peeled hook
// is the one through diagonal cell (j, j).
int hook_of(int r, int c) { return std::min(r, c); }

}  // namespace

std::string render_path(const LatticePath& path, const RenderSpec& spec) {
  const auto verts = vertices(path);
  const IndexSet peaks = peak_set(path);
  int width = path.east_count(), height = path.north_count();
  if (spec.box_outline && classify(path).is_grand) {
    width = (path.length() + 1) / 2;
    height = path.length() / 2;
  }

  if (spec.format == RenderFormat::ascii) {
    std::vector<std::string> grid(static_cast<std::size_t>(2 * height + 1),
                                  std::string(static_cast<std::size_t>(2 * width + 1), ' '));
    auto at = [&](int row, int col) -> char& { return grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; };
    for (int y = 0; y <= height; ++y)
      for (int x = 0; x <= width; ++x) at(2 * (height - y), 2 * x) = '.';
    for (std::size_t i = 0; i < verts.size(); ++i) {
      auto [x, y] = verts[i];
      const bool peak = std::binary_search(peaks.begin(), peaks.end(), static_cast<int>(i));
      at(2 * (height - y), 2 * x) = peak ? '*' : 'o';
      if (i + 1 < verts.size()) {
        if (verts[i + 1].first > x) at(2 * (height - y), 2 * x + 1) = '-';
        else at(2 * (height - y) - 1, 2 * x) = '|';
      }
    }
    std::ostringstream out;
    for (auto& line : grid) {
      line.erase(line.find_last_not_of(' ') + 1);
      out << line << '\n';
    }
    out << "path: " << to_string(path) << '\n';
    if (spec.peak_labels) out << "peaks: " << format_set(peaks) << '\n';
    return out.str();
  }

  const int w = 2 * kMargin + kCell * std::max(width, 1), h = 2 * kMargin + kCell * std::max(height, 1);
  auto px = [&](int x) { return kMargin + kCell * x; };
  auto py = [&](int y) { return h - kMargin - kCell * y; };
  std::ostringstream out;
  out << svg_header(w, h);
  if (spec.box_outline)
    out << "  <rect x=\"" << px(0) << "\" y=\"" << py(height) << "\" width=\"" << kCell * width << "\" height=\""
        << kCell * height << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
  const int diag = std::min(width, height);
  out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(diag) << "\" y2=\"" << py(diag)
      << "\" stroke=\"#999999\" stroke-dasharray=\"2,3\"/>\n";
  out << "  <polyline fill=\"none\" stroke=\"#1f4fbf\" stroke-width=\"3\" points=\"";
  for (std::size_t i = 0; i < verts.size(); ++i) out << (i ? " " : "") << px(verts[i].first) << ',' << py(verts[i].second);
  out << "\"/>\n";
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const bool peak = std::binary_search(peaks.begin(), peaks.end(), static_cast<int>(i));
    out << "  <circle cx=\"" << px(verts[i].first) << "\" cy=\"" << py(verts[i].second) << "\" r=\""
        << (peak ? 5 : 3) << "\" fill=\"" << (peak ? "#d62728" : "#1f4fbf") << "\"/>\n";
    if (peak && spec.peak_labels)
      out << "  <text x=\"" << px(verts[i].first) - 14 << "\" y=\"" << py(verts[i].second) - 4
          << "\" font-size=\"12\" fill=\"#d62728\">" << i << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_partition(const Partition& p, BoxSpec box, const RenderSpec& spec) {
  if (!fits_in(p, box))
    throw InputError("partition (" + to_string(p) + ") does not fit in B_" + std::to_string(box.n));
  const int width = box.width(), height = box.height();
  auto cell_char = [&](int r, int c) -> char {
    if (c > p.part(r)) return '.';
    if (!spec.hook_shading) return '#';
    const int h = hook_of(r, c);
    return h <= 9 ? static_cast<char>('0' + h) : '+';
  };

  if (spec.format == RenderFormat::ascii) {
    std::ostringstream out;
    const std::string rule = "+" + std::string(static_cast<std::size_t>(width), '-') + "+";
    if (spec.box_outline) out << rule << '\n';
    for (int r = 1; r <= height; ++r) {
      if (spec.box_outline) out << '|';
      for (int c = 1; c <= width; ++c) out << cell_char(r, c);
      if (spec.box_outline) out << '|';
      out << '\n';
    }
    if (spec.box_outline) out << rule << '\n';
    out << "partition: (" << to_string(p) << ") in B_" << box.n << "\n";
    out << "boundary: " << to_string(boundary_path(p, box)) << '\n';
    out << "hd: " << format_set(hook_decomposition(p)) << '\n';
    return out.str();
  }

  const int w = 2 * kMargin + kCell * std::max(width, 1), h = 2 * kMargin + kCell * std::max(height, 1);
  std::ostringstream out;
  out << svg_header(w, h);
  for (int r = 1; r <= height; ++r)
    for (int c = 1; c <= width; ++c) {
      const bool filled = c <= p.part(r);
      const char* fill = "none";
      if (filled) {
        fill = spec.hook_shading ? kHookColors[static_cast<std::size_t>(hook_of(r, c) - 1) % std::size(kHookColors)]
                                 : "#dddddd";
      }
      out << "  <rect x=\"" << kMargin + kCell * (c - 1) << "\" y=\"" << kMargin + kCell * (r - 1) << "\" width=\""
          << kCell << "\" height=\"" << kCell << "\" fill=\"" << fill << "\" stroke=\""
          << (filled ? "#333333" : "#dddddd") << "\"/>\n";
    }
  if (spec.box_outline)
    out << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kCell * width << "\" height=\""
        << kCell * height << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"2\"/>\n";
  const auto verts = vertices(boundary_path(p, box));
  out << "  <polyline fill=\"none\" stroke=\"#1f4fbf\" stroke-width=\"3\" points=\"";
  for (std::size_t i = 0; i < verts.size(); ++i)
    out << (i ? " " : "") << kMargin + kCell * verts[i].first << ',' << h - kMargin - kCell * verts[i].second;
  out << "\"/>\n</svg>\n";
  return out.str();
}

std::string render_tableau(const StandardTableau& t, const RenderSpec& spec) {
  if (spec.format == RenderFormat::ascii) {
    int w = 1;
    for (const auto& row : t.rows())
      for (int v : row) w = std::max(w, static_cast<int>(std::to_string(v).size()));
    std::ostringstream out;
    for (const auto& row : t.rows()) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        const std::string s = std::to_string(row[c]);
        out << (c ? " " : "") << std::string(static_cast<std::size_t>(w) - s.size(), ' ') << s;
      }
      out << '\n';
    }
    out << "descents: " << format_set(tableau_descent_set(t)) << '\n';
    return out.str();
  }
  const int w = 2 * kMargin + kCell * std::max(t.column_count(), 1), h = 2 * kMargin + kCell * std::max(t.row_count(), 1);
  std::ostringstream out;
  out << svg_header(w, h);
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      const int x = kMargin + kCell * static_cast<int>(c), y = kMargin + kCell * static_cast<int>(r);
      out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell << "\" height=\"" << kCell
          << "\" fill=\"none\" stroke=\"#333333\"/>\n"
          << "  <text x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell / 2 + 5
          << "\" font-size=\"14\" text-anchor=\"middle\">" << t.rows()[r][c] << "</text>\n";
    }
  out << "</svg>\n";
  return out.str();
}

std::string render_chain(const ChainTrace& trace, const RenderSpec& spec) {
  std::vector<std::string> lines;
  for (const auto& st : trace.stages) {
    std::string line = st.map == "input" ? "input" : "-" + st.map + "->";
    line += " " + st.kind + " " + to_string(st.value) + "   " + st.statistic_name + " = " + format_set(st.statistic);
    lines.push_back(std::move(line));
  }
  lines.push_back(std::string("statistic preserved: ") + (trace.statistic_constant ? "yes" : "no"));
  if (spec.format == RenderFormat::ascii) {
    std::ostringstream out;
    for (const auto& l : lines) out << l << '\n';
    return out.str();
  }
  std::size_t longest = 0;
  for (const auto& l : lines) longest = std::max(longest, l.size());
  const int w = 2 * kMargin + 8 * static_cast<int>(longest), h = 2 * kMargin + 20 * static_cast<int>(lines.size());
  std::ostringstream out;
  out << svg_header(w, h);
  for (std::size_t i = 0; i < lines.size(); ++i)
    out << "  <text x=\"" << kMargin << "\" y=\"" << kMargin + 20 * static_cast<int>(i) + 12
        << "\" font-family=\"monospace\" font-size=\"13\">" << xml_escape(lines[i]) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render(const RenderSpec& spec, std::string_view text) {
  switch (spec.object) {
    case RenderObject::path: return render_path(parse_path(text), spec);
    case RenderObject::partition: {
      const Partition p = parse_partition(text);
      int n = 2 * std::max(p.length(), p.part(1));
      if (spec.box) n = *spec.box;
      return render_partition(p, BoxSpec{n}, spec);
    }
    case RenderObject::tableau: return render_tableau(parse_tableau(text), spec);
    case RenderObject::permutation_chain:
      return render_chain(map_chain(parse_permutation(text), spec.chain, spec.box), spec);
  }
  return {};
}

}  // namespace hookline
