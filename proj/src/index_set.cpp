#include "hookline/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <charconv>
#include <sstream>

#include "hookline/error.hpp"

namespace hookline {

std::string format_set(const IndexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

IndexSet parse_index_set(std::string_view text) {
  IndexSet out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '{' || c == '}' || c == ',' || c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{} || v <= 0) throw InputError("bad index set '" + std::string(text) + "'");
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw InputError("repeated element in index set '" + std::string(text) + "'");
  return out;
}

int set_sum(const IndexSet& s) { return std::accumulate(s.begin(), s.end(), 0); }

bool has_consecutive(const IndexSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == s[i - 1] + 1) return true;
  return false;
}

std::uint64_t to_mask(const IndexSet& s) {
  std::uint64_t m = 0;
  for (int j : s) m |= std::uint64_t{1} << (j - 1);
  return m;
}

IndexSet from_mask(std::uint64_t mask) {
  IndexSet s;
  for (int j = 1; mask; ++j, mask >>= 1)
    if (mask & 1) s.push_back(j);
  return s;
}

std::vector<IndexSet> sparse_subsets(int bound) {
  std::vector<IndexSet> out;
  IndexSet cur;
  // Depth-first over the next admissible element; emitted in lexicographic
  // order, then re-sorted by mask below.
  auto rec = [&](auto&& self, int next) -> void {
    out.push_back(cur);
    for (int j = next; j <= bound; ++j) {
      cur.push_back(j);
      self(self, j + 2);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(),
            [](const IndexSet& a, const IndexSet& b) { return to_mask(a) < to_mask(b); });
  return out;
}

}  // namespace hookline
