#include "dga_checks.hpp"

#include <bit>
#include <vector>

namespace checks {

using hyperarr::AtomMask;
using hyperarr::RelativeAtomicComplex;
using hyperarr::SparseVector;

void Tally::record(bool pass, const std::string& what) {
  ++cases;
  if (pass) return;
  if (failures++ == 0) first = what;
}

namespace {

std::vector<AtomMask> generators(const RelativeAtomicComplex& c, int max_degree) {
  std::vector<AtomMask> out;
  for (AtomMask m = 0; m < c.generator_count(); ++m)
    if (c.degree(m) <= max_degree) out.push_back(m);
  return out;
}

SparseVector gen(AtomMask m) { return SparseVector::unit(m); }

} // namespace

Tally d_squared(const RelativeAtomicComplex& c, int max_degree) {
  Tally t;
  for (auto m : generators(c, max_degree)) t.record(c.d(c.d(gen(m))).empty(), "d^2 " + c.label(m));
  return t;
}

Tally leibniz_and_commutativity(const RelativeAtomicComplex& c, int max_degree) {
  Tally t;
  const auto gens = generators(c, max_degree);
  std::vector<SparseVector> d(c.generator_count());
  for (auto m : gens) d[m] = c.d(gen(m));
  for (auto a : gens)
    for (auto b : gens) {
      const SparseVector ab = c.multiply(gen(a), gen(b));
      SparseVector rhs = c.multiply(d[a], gen(b));
      rhs.add_scaled(c.multiply(gen(a), d[b]), c.degree(a) % 2 ? -1 : 1);
      t.record(c.d(ab) == rhs, "Leibniz " + c.label(a) + " " + c.label(b));
      SparseVector ba = c.multiply(gen(b), gen(a));
      if ((c.degree(a) * c.degree(b)) % 2) ba *= -1;
      t.record(ab == ba, "commutativity " + c.label(a) + " " + c.label(b));
    }
  return t;
}

Tally associativity(const RelativeAtomicComplex& c, int max_degree) {
  Tally t;
  const AtomMask full = static_cast<AtomMask>(c.generator_count() - 1);
  for (AtomMask a = 0; a <= full; ++a) {
    if (c.degree(a) > max_degree) continue;
    const AtomMask rest = full & ~a;
    // b runs over the subsets of rest, then c over the subsets of rest - b
    for (AtomMask b = rest;; b = (b - 1) & rest) {
      if (c.degree(b) <= max_degree) {
        const AtomMask rest2 = rest & ~b;
        for (AtomMask e = rest2;; e = (e - 1) & rest2) {
          if (c.degree(e) <= max_degree) {
            auto left = c.multiply(c.multiply(gen(a), gen(b)), gen(e));
            auto right = c.multiply(gen(a), c.multiply(gen(b), gen(e)));
            t.record(left == right, "associativity " + c.label(a) + " " + c.label(b) + " " + c.label(e));
          }
          if (e == 0) break;
        }
      }
      if (b == 0) break;
    }
  }
  return t;
}

} // namespace checks
