#include "hookline/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hookline/error.hpp"

namespace hookline {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n)
      throw InputError("permutation value " + std::to_string(v) + " out of range 1.." +
                       std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw InputError("duplicate value " + std::to_string(v) + " in permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation from_trusted(std::vector<int> entries) {
  return Permutation(std::move(entries), Permutation::Trusted{});
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  return from_trusted(std::move(e));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = n - i;
  return from_trusted(std::move(e));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return from_trusted(std::move(inv));
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ',' && text[j] != ' ' && text[j] != '\t' &&
           text[j] != '\n' && text[j] != '\r')
      ++j;
    const std::string_view token = text.substr(i, j - i);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw InputError("non-integer token '" + std::string(token) + "' in permutation");
    values.push_back(v);
    i = j;
  }
  return Permutation(std::move(values));
}

std::string to_string(const Permutation& p) {
  std::ostringstream out;
  for (int i = 1; i <= p.size(); ++i) out << (i > 1 ? " " : "") << p(i);
  return out.str();
}

IndexSet descent_set(const Permutation& p) {
  IndexSet s;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) s.push_back(i);
  return s;
}

IndexSet ascent_set(const Permutation& p) {
  IndexSet s;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) < p(i + 1)) s.push_back(i);
  return s;
}

int maj(const Permutation& p) { return set_sum(descent_set(p)); }
int comaj(const Permutation& p) { return set_sum(ascent_set(p)); }

DescentProfile descent_profile(const Permutation& p) {
  DescentProfile d;
  d.descent_set = descent_set(p);
  d.ascent_set = ascent_set(p);
  d.maj = set_sum(d.descent_set);
  d.comaj = set_sum(d.ascent_set);
  return d;
}

bool is_involution(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(p(i)) != i) return false;
  return true;
}

namespace {

// Extends a partial embedding of pattern[0..depth) into p, choosing positions
// left to right. `chosen` holds the values picked so far.
bool embeds(const Permutation& p, const Permutation& pattern, int depth, int next_pos,
            std::vector<int>& chosen) {
  const int m = pattern.size();
  if (depth == m) return true;
  for (int pos = next_pos; pos <= p.size() - (m - depth - 1); ++pos) {
    const int v = p(pos);
    bool ok = true;
    for (int d = 0; d < depth && ok; ++d)
      ok = (pattern(d + 1) < pattern(depth + 1)) == (chosen[static_cast<std::size_t>(d)] < v);
    if (!ok) continue;
    chosen[static_cast<std::size_t>(depth)] = v;
    if (embeds(p, pattern, depth + 1, pos + 1, chosen)) return true;
  }
  return false;
}

}  // namespace

bool avoids(const Permutation& p, const Permutation& pattern) {
  if (pattern.size() == 0) return false;
  std::vector<int> chosen(static_cast<std::size_t>(pattern.size()));
  return !embeds(p, pattern, 0, 1, chosen);
}

bool avoids_321(const Permutation& p) {
  int max_so_far = 0;
  int last_other = 0;
  for (int v : p.entries()) {
    if (v > max_so_far) {
      max_so_far = v;
    } else {
      if (v < last_other) return false;
      last_other = v;
    }
  }
  return true;
}

IndexSet left_to_right_minima(const Permutation& p) {
  IndexSet s;
  int min_so_far = p.size() + 1;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) < min_so_far) {
      s.push_back(i);
      min_so_far = p(i);
    }
  }
  return s;
}

std::vector<FibonacciBlock> fibonacci_blocks(const Permutation& p) {
  std::vector<FibonacciBlock> blocks;
  int i = 1;
  while (i <= p.size()) {
    if (p(i) == i) {
      blocks.push_back(FibonacciBlock::single);
      i += 1;
    } else if (i < p.size() && p(i) == i + 1 && p(i + 1) == i) {
      blocks.push_back(FibonacciBlock::pair);
      i += 2;
    } else {
      throw InputError("permutation " + to_string(p) +
                       " is not a direct sum of blocks 1 and 21 (NotFibonacci)");
    }
  }
  return blocks;
}

bool is_fibonacci(const Permutation& p) {
  for (int i = 1; i <= p.size();) {
    if (p(i) == i) {
      i += 1;
    } else if (i < p.size() && p(i) == i + 1 && p(i + 1) == i) {
      i += 2;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace hookline
