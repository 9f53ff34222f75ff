#pragma once

#include <cstddef>
#include <string>

#include "hyperarr/dga.hpp"

namespace checks {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;
  bool ok() const { return failures == 0; }
  void record(bool pass, const std::string& what);
};

/// d(d a) = 0 for every generator of degree <= max_degree.
Tally d_squared(const hyperarr::RelativeAtomicComplex& c, int max_degree);
/// d(ab) = (da)b + (-1)^|a| a(db) and ab = (-1)^{|a||b|} ba on all generator pairs.
Tally leibniz_and_commutativity(const hyperarr::RelativeAtomicComplex& c, int max_degree);
/// (ab)c = a(bc) on all triples of pairwise disjoint generators; products of
/// overlapping generators vanish on both sides.
Tally associativity(const hyperarr::RelativeAtomicComplex& c, int max_degree);

} // namespace checks
