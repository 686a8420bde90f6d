#include "hookline/ground_truth.hpp"

#include "hookline/error.hpp"

namespace hookline {

namespace {

std::vector<Count>& bump(std::vector<Count>& v, int index) {
  if (static_cast<int>(v.size()) <= index) v.resize(static_cast<std::size_t>(index) + 1, 0);
  v[static_cast<std::size_t>(index)] = checked::add(v[static_cast<std::size_t>(index)], 1);
  return v;
}

}  // namespace

QPoly maj_poly(PermClass cls, MajorStatistic stat, Backend backend) {
  std::vector<Count> c;
  for_each_member(cls, backend, [&](const Permutation& p) {
    bump(c, stat == MajorStatistic::maj ? maj(p) : comaj(p));
  });
  return QPoly(std::move(c));
}

QPoly maj_poly_with_des(PermClass cls, int k, Backend backend) {
  std::vector<Count> c;
  for_each_member(cls, backend, [&](const Permutation& p) {
    const IndexSet d = descent_set(p);
    if (static_cast<int>(d.size()) == k) bump(c, set_sum(d));
  });
  return QPoly(std::move(c));
}

std::vector<Count> des_histogram(PermClass cls, Backend backend) {
  std::vector<Count> c;
  for_each_member(cls, backend,
                  [&](const Permutation& p) { bump(c, static_cast<int>(descent_set(p).size())); });
  return c;
}

SubsetPoly descent_set_poly(PermClass cls, Backend backend) {
  if (cls.n > 65) throw InputError("descent-set polynomials support at most 64 variables");
  SubsetPoly poly;
  for_each_member(cls, backend, [&](const Permutation& p) { poly.add_term(to_mask(descent_set(p)), 1); });
  return poly;
}

QPoly double213_enumerated(int n, Backend backend) {
  return maj_poly({ClassTag::i321_213, n}, MajorStatistic::maj, backend);
}

}  // namespace hookline
