#pragma once

#include <map>
#include <vector>

#include "hookline/checked.hpp"
#include "hookline/perm_class.hpp"
#include "hookline/qpoly.hpp"
#include "hookline/subset_poly.hpp"

namespace hookline {

// Generating polynomials computed by enumerating the class. These are the
// oracles the closed forms are checked against.

enum class MajorStatistic { maj, comaj };

/// sum over the class of q^{maj} (or q^{comaj}).
QPoly maj_poly(PermClass cls, MajorStatistic stat = MajorStatistic::maj,
               Backend backend = Backend::structural);

/// sum over members with exactly k descents of q^{maj}.
QPoly maj_poly_with_des(PermClass cls, int k, Backend backend = Backend::structural);

/// Entry k = number of members with k descents.
std::vector<Count> des_histogram(PermClass cls, Backend backend = Backend::structural);

/// sum over the class of x_{Des}.
SubsetPoly descent_set_poly(PermClass cls, Backend backend = Backend::structural);

/// Enumerated maj polynomial of I_n(321,213).
QPoly double213_enumerated(int n, Backend backend = Backend::structural);

}  // namespace hookline
