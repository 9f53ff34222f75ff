#include <doctest.h>

#include <cmath>

#include "corpus.hpp"
#include "hyperarr/chromatic.hpp"
#include "hyperarr/errors.hpp"
#include "hyperarr/lattice.hpp"
#include "oracles.hpp"

using namespace hyperarr;

TEST_CASE("proper colorings of ex28") {
  auto h = corpus::ex28();
  CHECK_FALSE(is_proper(h, {1, 1, 2, 2}));
  CHECK(is_proper(h, {1, 2, 1, 2}));
  CHECK(is_proper(corpus::edgeless(3), {1, 1, 1}));
  CHECK(count_proper_colorings(h, 3) == 48);
  CHECK(count_proper_colorings(h, 1) == 0);
  CHECK(count_proper_colorings(corpus::edgeless(2), 5) == 25);
}

TEST_CASE("chromatic polynomials") {
  CHECK(chromatic_polynomial(corpus::ex28()) == IntegerPolynomial({0, 1, -1, -1, 1}));
  CHECK(chromatic_polynomial(corpus::edgeless(3)) == IntegerPolynomial::monomial(3));
  CHECK(chromatic_polynomial(build_kequal(3, 2)) == IntegerPolynomial({0, 2, -3, 1}));
}

TEST_CASE("Blass-Sagan counts") {
  CHECK(blass_sagan_count(corpus::ex28(), 1) == 48);
  CHECK(blass_sagan_count(corpus::edgeless(2), 2) == 25);
  CHECK(blass_sagan_count(build_kequal(3, 2), 1) == 6);
}

TEST_CASE("counts agree with direct enumeration") {
  for (const auto& [name, h] : corpus::acceptance_corpus()) {
    CAPTURE(name);
    auto p = chromatic_polynomial(h);
    for (int t = 0; t <= std::min(h.vertex_count() + 1, 5); ++t) {
      CHECK(count_proper_colorings(h, t) == oracle::proper_colorings(h, t));
      CHECK(p(t) == static_cast<std::int64_t>(oracle::proper_colorings(h, t)));
    }
    for (int s : {1, 2})
      if (std::pow(2 * s + 1, h.vertex_count()) <= 2e5) CHECK(blass_sagan_count(h, s) == oracle::lattice_points_off(h, s));
  }
}

TEST_CASE("deletion-contraction does not depend on the pivot") {
  for (const auto& [name, h] : corpus::acceptance_corpus()) {
    CAPTURE(name);
    CHECK(chromatic_polynomial(h, PivotRule::FewestEdges) == chromatic_polynomial(h, PivotRule::LastColor));
  }
}

TEST_CASE("nested colors") {
  EdgeColoredHypergraph h(4, {{{1, 2}, "x"}, {{1, 2, 3}, "y"}, {{3, 4}, "z"}});
  auto p = chromatic_polynomial(h);
  CHECK(p.coefficients() == oracle::whitney_polynomial(h));
  CHECK(p == characteristic_polynomial(IntersectionLattice(h), 4));
  CHECK(p == chromatic_polynomial_by_counting(h));
}

TEST_CASE("interpolated counting matches the subset expansion") {
  for (const auto& [name, h] : corpus::acceptance_corpus()) {
    CAPTURE(name);
    CHECK(chromatic_polynomial_by_counting(h).coefficients() == oracle::whitney_polynomial(h));
  }
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(count_proper_colorings(corpus::mcs7(), 5, 1000), ResourceError);
  CHECK_THROWS_AS(chromatic_polynomial_by_counting(corpus::mcs7(), 10), ResourceError);
  CHECK_THROWS_AS(blass_sagan_count(corpus::mcs7(), 2, 10), ResourceError);
}
