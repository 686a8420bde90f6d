#include "hookline/perm_class.hpp"

#include <algorithm>
#include <numeric>

#include "hookline/checked.hpp"
#include "hookline/error.hpp"
#include "hookline/lattice_path.hpp"
#include "hookline/tableau.hpp"

namespace hookline {

namespace {

const Permutation& pattern_321() {
  static const Permutation p({3, 2, 1});
  return p;
}
const Permutation& pattern_123() {
  static const Permutation p({1, 2, 3});
  return p;
}
const Permutation& pattern_312() {
  static const Permutation p({3, 1, 2});
  return p;
}
const Permutation& pattern_213() {
  static const Permutation p({2, 1, 3});
  return p;
}

Count involution_count(int n) {
  Count a = 1, b = 1;  // I_0, I_1
  for (int k = 2; k <= n; ++k) {
    const Count next = checked::add(b, checked::mul(k - 1, a));
    a = b;
    b = next;
  }
  return n == 0 ? 1 : b;
}

Count factorial(int n) {
  Count f = 1;
  for (int k = 2; k <= n; ++k) f = checked::mul(f, k);
  return f;
}

void check_size(PermClass cls, std::int64_t limit) {
  if (cls.n < 0) throw InputError("permutation size must be non-negative");
  std::optional<Count> size;
  try {
    size = expected_class_size(cls);
  } catch (const OverflowError&) {
    throw ResourceLimitError("class " + std::string(class_name(cls.tag)) + " at n=" +
                             std::to_string(cls.n) + " is too large to enumerate");
  }
  if ((size && *size > limit) || cls.n > 62)
    throw ResourceLimitError("class " + std::string(class_name(cls.tag)) + " at n=" +
                             std::to_string(cls.n) + " exceeds the enumeration limit");
}

void all_permutations(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  do {
    visit(from_trusted(e));
  } while (std::next_permutation(e.begin(), e.end()));
}

void all_involutions(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i) -> void {
    while (i <= n && e[static_cast<std::size_t>(i - 1)] != 0) ++i;
    if (i > n) {
      visit(from_trusted(e));
      return;
    }
    e[static_cast<std::size_t>(i - 1)] = i;
    self(self, i + 1);
    for (int j = i + 1; j <= n; ++j) {
      if (e[static_cast<std::size_t>(j - 1)] != 0) continue;
      e[static_cast<std::size_t>(i - 1)] = j;
      e[static_cast<std::size_t>(j - 1)] = i;
      self(self, i + 1);
      e[static_cast<std::size_t>(j - 1)] = 0;
    }
    e[static_cast<std::size_t>(i - 1)] = 0;
  };
  rec(rec, 1);
}

void fibonacci_permutations(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> e;
  auto rec = [&](auto&& self) -> void {
    const int i = static_cast<int>(e.size());
    if (i == n) {
      visit(from_trusted(e));
      return;
    }
    e.push_back(i + 1);
    self(self);
    e.pop_back();
    if (i + 2 <= n) {
      e.push_back(i + 2);
      e.push_back(i + 1);
      self(self);
      e.resize(static_cast<std::size_t>(i));
    }
  };
  rec(rec);
}

}  // namespace

std::string_view class_name(ClassTag tag) {
  switch (tag) {
    case ClassTag::all: return "all";
    case ClassTag::involutions: return "involutions";
    case ClassTag::i321: return "i321";
    case ClassTag::i123: return "i123";
    case ClassTag::i321_312: return "i321-312";
    case ClassTag::i321_213: return "i321-213";
    case ClassTag::s321: return "s321";
  }
  return "?";
}

ClassTag parse_class(std::string_view name) {
  std::string s(name);
  std::replace(s.begin(), s.end(), '_', '-');
  if (s == "inv") return ClassTag::involutions;
  for (ClassTag t : {ClassTag::all, ClassTag::involutions, ClassTag::i321, ClassTag::i123,
                     ClassTag::i321_312, ClassTag::i321_213, ClassTag::s321})
    if (s == class_name(t)) return t;
  throw InputError("unknown permutation class '" + std::string(name) + "'");
}

bool contains(ClassTag tag, const Permutation& p) {
  switch (tag) {
    case ClassTag::all: return true;
    case ClassTag::involutions: return is_involution(p);
    case ClassTag::i321: return is_involution(p) && avoids(p, pattern_321());
    case ClassTag::i123: return is_involution(p) && avoids(p, pattern_123());
    case ClassTag::i321_312:
      return is_involution(p) && avoids(p, pattern_321()) && avoids(p, pattern_312());
    case ClassTag::i321_213:
      return is_involution(p) && avoids(p, pattern_321()) && avoids(p, pattern_213());
    case ClassTag::s321: return avoids(p, pattern_321());
  }
  return false;
}

std::optional<std::int64_t> expected_class_size(PermClass cls) {
  const int n = cls.n;
  switch (cls.tag) {
    case ClassTag::all: return factorial(n);
    case ClassTag::involutions: return involution_count(n);
    case ClassTag::i321:
    case ClassTag::i123: return binomial(n, n / 2);
    case ClassTag::s321: return catalan(n);
    case ClassTag::i321_312: {
      Count a = 1, b = 1;
      for (int k = 2; k <= n; ++k) {
        const Count next = checked::add(a, b);
        a = b;
        b = next;
      }
      return b;
    }
    case ClassTag::i321_213: return std::nullopt;
  }
  return std::nullopt;
}

void for_each_member(PermClass cls, Backend backend,
                     const std::function<void(const Permutation&)>& visit, std::int64_t limit) {
  const int n = cls.n;
  if (backend == Backend::brute) {
    if (n < 0) throw InputError("permutation size must be non-negative");
    if (n > kBruteForceMaxN)
      throw ResourceLimitError("brute-force enumeration is limited to n <= " +
                               std::to_string(kBruteForceMaxN));
    all_permutations(n, [&](const Permutation& p) {
      if (contains(cls.tag, p)) visit(p);
    });
    return;
  }
  // I_n(321,213) is streamed from I_n(321), so it shares that bound.
  check_size({cls.tag == ClassTag::i321_213 ? ClassTag::i321 : cls.tag, n}, limit);
  switch (cls.tag) {
    case ClassTag::all: all_permutations(n, visit); break;
    case ClassTag::involutions: all_involutions(n, visit); break;
    case ClassTag::i321:
      for_each_path(PathFamily::prefix, n,
                    [&](const LatticePath& path) { visit(rho_inverse(path)); });
      break;
    case ClassTag::i123:
      for_each_path(PathFamily::prefix, n, [&](const LatticePath& path) {
        visit(involution_transpose(rho_inverse(path)));
      });
      break;
    case ClassTag::i321_312: fibonacci_permutations(n, visit); break;
    case ClassTag::i321_213:
      for_each_path(PathFamily::prefix, n, [&](const LatticePath& path) {
        const Permutation p = rho_inverse(path);
        if (avoids(p, pattern_213())) visit(p);
      });
      break;
    case ClassTag::s321:
      for_each_path(PathFamily::dyck, n,
                    [&](const LatticePath& path) { visit(dyck_to_s321(path)); });
      break;
  }
}

std::vector<Permutation> enumerate(PermClass cls, Backend backend, std::int64_t limit) {
  std::vector<Permutation> out;
  for_each_member(cls, backend, [&](const Permutation& p) { out.push_back(p); }, limit);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hookline
