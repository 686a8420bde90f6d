#include "hookline/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hookline/error.hpp"

namespace hookline {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must weakly decrease");
  }
}

int Partition::size() const {
  int m = 0;
  for (int v : parts_) m += v;
  return m;
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
  for (int v : parts_)
    for (int x = 0; x < v; ++x) ++c[static_cast<std::size_t>(x)];
  return Partition(std::move(c));
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::istringstream in{std::string(text)};
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (in.eof() && parts.empty()) break;  // "" or "   "
      throw InputError("empty part in partition '" + std::string(text) + "'");
    }
    token = token.substr(first, token.find_last_not_of(" \t") - first + 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw InputError("non-integer part '" + token + "' in partition");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) out << (i ? "," : "") << p.parts()[i];
  return out.str();
}

bool fits_in(const Partition& p, BoxSpec box) {
  return p.length() <= box.height() && p.part(1) <= box.width();
}

int durfee_side(const Partition& p) {
  int k = 0;
  while (p.part(k + 1) >= k + 1) ++k;
  return k;
}

IndexSet hook_decomposition(const Partition& p) {
  const int k = durfee_side(p);
  const Partition c = p.conjugate();
  IndexSet hooks;
  // Diagonal cell (j, j) carries arm part(j) - j and leg c.part(j) - j; the
  // innermost (j = k) hook is the smallest.
  for (int j = k; j >= 1; --j) hooks.push_back((p.part(j) - j) + (c.part(j) - j) + 1);
  return hooks;
}

LatticePath boundary_path(const Partition& p, BoxSpec box) {
  if (!fits_in(p, box))
    throw InputError("partition (" + to_string(p) + ") does not fit in B_" + std::to_string(box.n));
  const Partition c = p.conjugate();
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(box.n));
  int y = 0;
  for (int x = 0; x < box.width(); ++x) {
    for (; y < box.height() - c.part(x + 1); ++y) steps.push_back(Step::N);
    steps.push_back(Step::E);
  }
  for (; y < box.height(); ++y) steps.push_back(Step::N);
  return LatticePath(std::move(steps));
}

Partition partition_from_boundary(const LatticePath& grand) {
  if (!classify(grand).is_grand)
    throw InputError(to_string(grand) + " is not a Grand Dyck path");
  const int height = grand.length() / 2;
  std::vector<int> columns;
  int y = 0;
  for (Step st : grand.steps()) {
    if (st == Step::N) {
      ++y;
    } else if (height - y > 0) {
      columns.push_back(height - y);
    }
  }
  return Partition(std::move(columns)).conjugate();
}

int area_above(const LatticePath& grand) {
  const int height = grand.length() / 2;
  int y = 0, area = 0;
  for (Step st : grand.steps()) {
    if (st == Step::N) {
      ++y;
    } else {
      area += height - y;
    }
  }
  return area;
}

namespace {

// The unique path of the given length with exactly the listed peak vertices
// (x strictly and y strictly increasing): E-run, N-run, peak, ..., then the
// trailing E-run and N-run.
LatticePath path_through_peaks(const std::vector<std::pair<int, int>>& peaks, BoxSpec box) {
  std::vector<Step> steps;
  int x = 0, y = 0;
  for (auto [px, py] : peaks) {
    for (; x < px; ++x) steps.push_back(Step::E);
    for (; y < py; ++y) steps.push_back(Step::N);
  }
  for (; x < box.width(); ++x) steps.push_back(Step::E);
  for (; y < box.height(); ++y) steps.push_back(Step::N);
  return LatticePath(std::move(steps));
}

}  // namespace

LatticePath psi(const Partition& p, BoxSpec box) {
  const LatticePath g = boundary_path(p, box);
  const int k = durfee_side(p);
  const int h = box.height();
  // Split at M = (k, h - k), which is vertex h of the boundary path. Positions
  // count outward from M on both sides, starting at 1.
  std::vector<int> a, b;
  for (int pos = 1; pos <= h; ++pos)
    if (g.step(h - pos + 1) == Step::E) a.push_back(pos);
  for (int pos = 1; pos <= box.width(); ++pos)
    if (g.step(h + pos) == Step::N) b.push_back(pos);
  if (static_cast<int>(a.size()) != k || static_cast<int>(b.size()) != k)
    throw Error("psi: boundary path does not pass through the Durfee corner");
  std::vector<std::pair<int, int>> peaks;
  for (int j = 0; j < k; ++j)
    peaks.emplace_back(b[static_cast<std::size_t>(j)] - 1, a[static_cast<std::size_t>(j)]);
  return path_through_peaks(peaks, box);
}

Partition psi_inverse(const LatticePath& grand) {
  if (!classify(grand).is_grand)
    throw InputError("psi_inverse: " + to_string(grand) + " is not a Grand Dyck path");
  const BoxSpec box{grand.length()};
  const int h = box.height();
  std::vector<Step> steps(static_cast<std::size_t>(h), Step::N);
  std::vector<Step> tail(static_cast<std::size_t>(box.width()), Step::E);
  for (int label : peak_set(grand)) {
    const auto [x, y] = grand.vertex(label);
    steps[static_cast<std::size_t>(h - y)] = Step::E;  // position a = y before M
    tail[static_cast<std::size_t>(x)] = Step::N;       // position b = x + 1 after M
  }
  steps.insert(steps.end(), tail.begin(), tail.end());
  return partition_from_boundary(LatticePath(std::move(steps)));
}

void for_each_in_box(BoxSpec box, const std::function<void(const Partition&)>& visit) {
  std::vector<int> parts;
  auto rec = [&](auto&& self, int max_part) -> void {
    visit(Partition(parts));
    if (static_cast<int>(parts.size()) == box.height()) return;
    for (int v = 1; v <= max_part; ++v) {
      parts.push_back(v);
      self(self, v);
      parts.pop_back();
    }
  };
  rec(rec, box.width());
}

std::vector<Partition> enumerate_in_box(BoxSpec box) {
  std::vector<Partition> out;
  for_each_in_box(box, [&](const Partition& p) { out.push_back(p); });
  return out;
}

Count count_of_size(BoxSpec box, int m) {
  Count c = 0;
  for_each_in_box(box, [&](const Partition& p) { c += p.size() == m; });
  return c;
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
      parts.push_back(v);
      self(self, remaining - v, v);
      parts.pop_back();
    }
  };
  if (m >= 0) rec(rec, m, m);
  return out;
}

Count partition_count(int m) { return static_cast<Count>(partitions_of(m).size()); }

namespace {

void check_hooks(const IndexSet& hooks) {
  for (std::size_t j = 0; j < hooks.size(); ++j) {
    if (hooks[j] < 1) throw InputError("hook sizes must be positive");
    if (j > 0 && hooks[j] - hooks[j - 1] <= 1)
      throw InputError("hook sizes " + format_set(hooks) + " must differ by more than 1");
  }
}

}  // namespace

std::vector<Partition> partitions_with_hd(const IndexSet& hooks) {
  check_hooks(hooks);
  const int k = static_cast<int>(hooks.size());
  // arms[t], legs[t] for the t-th hook counted from the innermost one.
  std::vector<int> arms(static_cast<std::size_t>(k)), legs(static_cast<std::size_t>(k));
  std::vector<Partition> out;

  auto assemble = [&] {
    // Diagonal cell j (1-based, outermost first) has arm arms[k-j], leg legs[k-j].
    auto arm = [&](int j) { return arms[static_cast<std::size_t>(k - j)]; };
    auto leg = [&](int j) { return legs[static_cast<std::size_t>(k - j)]; };
    std::vector<int> parts;
    const int rows = k == 0 ? 0 : 1 + leg(1);
    for (int r = 1; r <= rows; ++r) {
      if (r <= k) {
        parts.push_back(r + arm(r));
      } else {
        int len = 0;
        for (int j = 1; j <= k; ++j) len += j + leg(j) >= r;
        parts.push_back(len);
      }
    }
    out.emplace_back(std::move(parts));
  };

  auto rec = [&](auto&& self, int t) -> void {
    if (t == k) {
      assemble();
      return;
    }
    const int span = hooks[static_cast<std::size_t>(t)] - 1;  // arm + leg
    const int min_arm = t == 0 ? 0 : arms[static_cast<std::size_t>(t - 1)] + 1;
    const int min_leg = t == 0 ? 0 : legs[static_cast<std::size_t>(t - 1)] + 1;
    for (int arm = min_arm; arm <= span - min_leg; ++arm) {
      arms[static_cast<std::size_t>(t)] = arm;
      legs[static_cast<std::size_t>(t)] = span - arm;
      self(self, t + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Count hd_class_size(const IndexSet& hooks) {
  check_hooks(hooks);
  Count c = 1;
  for (std::size_t j = 0; j < hooks.size(); ++j)
    c = checked::mul(c, j == 0 ? hooks[0] : hooks[j] - hooks[j - 1] - 1);
  return c;
}

int hd_stable_box(const IndexSet& hooks) {
  if (hooks.empty()) return 0;
  return 2 * (hooks.back() - static_cast<int>(hooks.size()) + 1);
}

}  // namespace hookline
