#include "hookline/lattice_path.hpp"

#include <algorithm>

#include "hookline/checked.hpp"
#include "hookline/error.hpp"

namespace hookline {

int LatticePath::east_count() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::E));
}

int LatticePath::north_count() const { return length() - east_count(); }

std::pair<int, int> LatticePath::vertex(int i) const {
  int x = 0;
  for (int k = 1; k <= i; ++k) x += step(k) == Step::E;
  return {x, i - x};
}

LatticePath parse_path(std::string_view text) {
  std::vector<Step> steps;
  for (char c : text) {
    switch (c) {
      case 'N': case 'n': case 'U': case 'u': steps.push_back(Step::N); break;
      case 'E': case 'e': case 'R': case 'r': steps.push_back(Step::E); break;
      case ' ': case '\t': case '\n': case '\r': break;
      default: throw InputError(std::string("invalid path step '") + c + "'");
    }
  }
  return LatticePath(std::move(steps));
}

std::string to_string(const LatticePath& path) {
  std::string s;
  s.reserve(path.steps().size());
  for (Step st : path.steps()) s.push_back(static_cast<char>(st));
  return s;
}

PathKind classify(const LatticePath& path) {
  int height = 0;  // #N - #E
  bool prefix = true;
  for (Step st : path.steps()) {
    height += st == Step::N ? 1 : -1;
    if (height < 0) prefix = false;
  }
  const int len = path.length();
  PathKind k;
  k.is_prefix = prefix;
  k.is_grand = path.east_count() == (len + 1) / 2;
  k.is_dyck = prefix && height == 0;
  return k;
}

IndexSet peak_set(const LatticePath& path) {
  IndexSet s;
  for (int i = 1; i < path.length(); ++i)
    if (path.step(i) == Step::N && path.step(i + 1) == Step::E) s.push_back(i);
  return s;
}

StepMatching match_steps(const LatticePath& path) {
  StepMatching m;
  std::vector<int> open;
  for (int i = 1; i <= path.length(); ++i) {
    if (path.step(i) == Step::N) {
      open.push_back(i);
    } else if (!open.empty()) {
      m.pairs.emplace_back(open.back(), i);
      open.pop_back();
    } else {
      m.unmatched.push_back(i);
    }
  }
  // Unmatched E steps always precede the still-open N steps.
  m.unmatched.insert(m.unmatched.end(), open.begin(), open.end());
  return m;
}

LatticePath xi(const LatticePath& prefix) {
  if (!classify(prefix).is_prefix)
    throw InputError("xi: " + to_string(prefix) + " is not a Dyck path prefix");
  const StepMatching m = match_steps(prefix);
  auto steps = prefix.steps();
  const std::size_t flips = (m.unmatched.size() + 1) / 2;
  for (std::size_t t = 0; t < flips; ++t) steps[static_cast<std::size_t>(m.unmatched[t] - 1)] = Step::E;
  return LatticePath(std::move(steps));
}

LatticePath xi_inverse(const LatticePath& grand) {
  if (!classify(grand).is_grand)
    throw InputError("xi_inverse: " + to_string(grand) + " is not a Grand Dyck path");
  const StepMatching m = match_steps(grand);
  auto steps = grand.steps();
  for (int i : m.unmatched) steps[static_cast<std::size_t>(i - 1)] = Step::N;
  return LatticePath(std::move(steps));
}

LatticePath prefix_from_tableau(const StandardTableau& t) {
  if (t.row_count() > 2)
    throw InputError("tableau " + to_string(t) + " has more than two rows");
  std::vector<Step> steps(static_cast<std::size_t>(t.size()), Step::N);
  if (t.row_count() == 2)
    for (int v : t.rows()[1]) steps[static_cast<std::size_t>(v - 1)] = Step::E;
  return LatticePath(std::move(steps));
}

StandardTableau tableau_from_prefix(const LatticePath& prefix) {
  if (!classify(prefix).is_prefix)
    throw InputError(to_string(prefix) + " is not a Dyck path prefix");
  std::vector<std::vector<int>> rows(1);
  for (int i = 1; i <= prefix.length(); ++i) {
    if (prefix.step(i) == Step::N) {
      rows[0].push_back(i);
    } else {
      if (rows.size() == 1) rows.emplace_back();
      rows[1].push_back(i);
    }
  }
  if (rows[0].empty()) rows.clear();
  return tableau_from_trusted(std::move(rows));
}

LatticePath rho(const Permutation& p) {
  const auto [ins, rec] = rs_correspondence(p);
  if (rec.row_count() > 2 || !(ins == rec))
    throw InputError("rho: " + to_string(p) + " is not a 321-avoiding involution");
  return prefix_from_tableau(rec);
}

Permutation rho_inverse(const LatticePath& prefix) {
  const StandardTableau t = tableau_from_prefix(prefix);
  return rs_inverse(t, t);
}

LatticePath reflect(const LatticePath& path) {
  std::vector<Step> steps(path.steps().rbegin(), path.steps().rend());
  for (Step& st : steps) st = st == Step::N ? Step::E : Step::N;
  return LatticePath(std::move(steps));
}

LatticePath s321_to_dyck(const Permutation& p) {
  const auto [ins, rec] = rs_correspondence(p);
  if (rec.row_count() > 2) throw InputError("s321_to_dyck: " + to_string(p) + " contains 321");
  auto steps = prefix_from_tableau(rec).steps();
  const auto tail = reflect(prefix_from_tableau(ins)).steps();
  steps.insert(steps.end(), tail.begin(), tail.end());
  return LatticePath(std::move(steps));
}

Permutation dyck_to_s321(const LatticePath& dyck) {
  if (!classify(dyck).is_dyck)
    throw InputError("dyck_to_s321: " + to_string(dyck) + " is not a Dyck path");
  const auto half = static_cast<std::ptrdiff_t>(dyck.length() / 2);
  const LatticePath first(std::vector<Step>(dyck.steps().begin(), dyck.steps().begin() + half));
  const LatticePath second(std::vector<Step>(dyck.steps().begin() + half, dyck.steps().end()));
  return rs_inverse(tableau_from_prefix(reflect(second)), tableau_from_prefix(first));
}

std::int64_t path_family_size(PathFamily family, int n) {
  if (n < 0) return 0;
  switch (family) {
    case PathFamily::prefix:
    case PathFamily::grand: return binomial(n, n / 2);
    case PathFamily::dyck: return catalan(n);
  }
  return 0;
}

void for_each_path(PathFamily family, int n, const std::function<void(const LatticePath&)>& visit,
                   std::int64_t limit) {
  if (n < 0) throw InputError("path length must be non-negative");
  if (n > 62 || path_family_size(family, n) > limit)
    throw ResourceLimitError("path enumeration of size " + std::to_string(n) +
                             " exceeds the configured limit");
  const int len = family == PathFamily::dyck ? 2 * n : n;
  const int east_total = family == PathFamily::grand ? (n + 1) / 2 : len / 2;
  const int north_total = len - east_total;
  const bool ballot = family != PathFamily::grand;
  const bool exact = family != PathFamily::prefix;

  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(len));
  auto rec = [&](auto&& self, int north, int east) -> void {
    if (north + east == len) {
      visit(LatticePath(steps));
      return;
    }
    if (!exact || north < north_total) {
      steps.push_back(Step::N);
      self(self, north + 1, east);
      steps.pop_back();
    }
    if ((!ballot || east < north) && (!exact || east < east_total)) {
      steps.push_back(Step::E);
      self(self, north, east + 1);
      steps.pop_back();
    }
  };
  rec(rec, 0, 0);
}

std::vector<LatticePath> enumerate_paths(PathFamily family, int n, std::int64_t limit) {
  std::vector<LatticePath> out;
  for_each_path(family, n, [&](const LatticePath& p) { out.push_back(p); }, limit);
  return out;
}

}  // namespace hookline
