#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "dga_checks.hpp"
#include "hyperarr/dga.hpp"
#include "hyperarr/errors.hpp"
#include "hyperarr/lattice.hpp"
#include "oracles.hpp"

using namespace hyperarr;

namespace {

std::map<int, std::size_t> nonzero(const std::map<int, std::size_t>& betti) {
  std::map<int, std::size_t> out;
  for (const auto& [k, b] : betti)
    if (b) out[k] = b;
  return out;
}

std::map<int, std::size_t> betti(const EdgeColoredHypergraph& h, AtomOrder order = {}) {
  RelativeAtomicComplex c(h, std::move(order));
  return nonzero(cohomology(c, c.max_degree()).betti);
}

} // namespace

TEST_CASE("generators of ex28") {
  RelativeAtomicComplex c(corpus::ex28(), {"R", "B"});
  CHECK(c.generator_count() == 4);
  CHECK(c.degree(0) == 0);
  CHECK(c.degree(c.atom("B")) == 1);
  CHECK(c.degree(c.atom("R")) == 3);
  CHECK(c.degree(c.mask_of({"R", "B"})) == 4);
  CHECK(c.label(c.mask_of({"R", "B"})) == "a{R,B}");
  CHECK(c.label(0) == "a{}");
}

TEST_CASE("atom degrees") {
  for (int codim : {1, 2, 3, 4}) {
    RelativeAtomicComplex c(corpus::single_color(codim));
    CHECK(c.degree(1) == 2 * codim - 1);
  }
  for (auto [l, k] : {std::pair{4, 2}, {5, 3}, {6, 4}}) {
    RelativeAtomicComplex c(build_kequal(l, k));
    for (std::size_t i = 0; i < c.atom_count(); ++i) CHECK(c.degree(AtomMask{1} << i) == 2 * k - 3);
  }
}

TEST_CASE("differential") {
  RelativeAtomicComplex c(corpus::ex28_2(), {"R", "B", "G"});
  auto d = c.differential(c.mask_of({"R", "B", "G"}));
  REQUIRE(d.size() == 1);
  CHECK(d[0].mask == c.mask_of({"R", "G"}));
  CHECK(d[0].sign == 1);
  RelativeAtomicComplex e(corpus::ex28(), {"R", "B"});
  CHECK(e.differential(e.mask_of({"R", "B"})).empty());
  CHECK(e.differential(e.atom("R")).empty());
}

TEST_CASE("products") {
  RelativeAtomicComplex c(corpus::ex28_2(), {"R", "B", "G"});
  const auto r = SparseVector::unit(c.atom("R")), g = SparseVector::unit(c.atom("G")), b = SparseVector::unit(c.atom("B"));
  CHECK(c.multiply(r, g) == SparseVector::unit(c.mask_of({"R", "G"})));
  CHECK(c.multiply(r, b).empty());
  CHECK(c.multiply(SparseVector::unit(0), b) == b);
  CHECK(c.product_sign(c.atom("G"), c.atom("R")) == -1);
}

TEST_CASE("Betti numbers") {
  CHECK(betti(corpus::ex28()) == std::map<int, std::size_t>{{0, 1}, {1, 1}, {3, 1}, {4, 1}});
  CHECK(betti(corpus::single_color(2)) == std::map<int, std::size_t>{{0, 1}, {3, 1}});
  CHECK(betti(corpus::single_color(3)) == std::map<int, std::size_t>{{0, 1}, {5, 1}});
  CHECK(betti(corpus::two_disjoint()) == std::map<int, std::size_t>{{0, 1}, {3, 2}, {6, 1}});
  CHECK(betti(corpus::edgeless(3)) == std::map<int, std::size_t>{{0, 1}});
  auto k = betti(build_kequal(5, 3));
  CHECK(k.rbegin()->first <= 5);
}

TEST_CASE("Euler characteristic matches the generator count") {
  for (const auto& [name, h] : corpus::acceptance_corpus()) {
    CAPTURE(name);
    RelativeAtomicComplex c(h);
    std::int64_t from_generators = 0, from_betti = 0;
    for (AtomMask m = 0; m < c.generator_count(); ++m) from_generators += c.degree(m) % 2 ? -1 : 1;
    for (const auto& [k, b] : cohomology(c, c.max_degree()).betti)
      from_betti += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(b);
    CHECK(from_betti == from_generators);
  }
}

TEST_CASE("hyperplane arrangements follow the characteristic polynomial") {
  // for codim-1 atoms only, b_i = (-1)^i [t^(l-i)] chi
  std::vector<EdgeColoredHypergraph> cases{build_kequal(3, 2), build_kequal(4, 2),
                                           EdgeColoredHypergraph(4, {{{1, 2}, "a"}, {{2, 3}, "b"}, {{3, 4}, "c"}}),
                                           EdgeColoredHypergraph(4, {{{1, 2}, "a"}, {{2, 3}, "b"}, {{1, 3}, "c"}, {{3, 4}, "d"}})};
  for (const auto& h : cases) {
    auto chi = oracle::whitney_polynomial(h);
    std::map<int, std::size_t> expected;
    const int l = h.vertex_count();
    for (int i = 0; i <= l; ++i) {
      std::int64_t coeff = l - i < static_cast<int>(chi.size()) ? chi[static_cast<std::size_t>(l - i)] : 0;
      if (coeff) expected[i] = static_cast<std::size_t>((i % 2 ? -1 : 1) * coeff);
    }
    CHECK(betti(h) == expected);
  }
}

TEST_CASE("algebra identities on the corpus") {
  for (const auto& [name, h] : corpus::acceptance_corpus()) {
    if (h.color_count() > 6) continue;
    CAPTURE(name);
    RelativeAtomicComplex c(h);
    auto d2 = checks::d_squared(c, 12);
    auto lc = checks::leibniz_and_commutativity(c, 12);
    auto as = checks::associativity(c, 12);
    CHECK_MESSAGE(d2.ok(), d2.first);
    CHECK_MESSAGE(lc.ok(), lc.first);
    CHECK_MESSAGE(as.ok(), as.first);
  }
}

TEST_CASE("Betti numbers do not depend on the atom order") {
  std::mt19937 rng(3);
  for (const auto& [name, h] : corpus::acceptance_corpus()) {
    CAPTURE(name);
    auto order = h.colors();
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(betti(h, order) == betti(h));
  }
}

TEST_CASE("coboundary solver") {
  RelativeAtomicComplex c(corpus::mcs7());
  for (bool reverse : {false, true}) {
    CoboundarySolver s(c, reverse);
    for (AtomMask m = 0; m < c.generator_count(); ++m) {
      auto target = c.d(SparseVector::unit(m));
      if (target.empty()) continue;
      auto x = s.solve(target);
      REQUIRE(x.has_value());
      CHECK(c.d(*x) == target);
    }
    CHECK_FALSE(s.is_coboundary(SparseVector::unit(c.atom("l1"))));
  }
}

TEST_CASE("input and budget errors") {
  CHECK_THROWS_AS(RelativeAtomicComplex(corpus::ex28(), {"R"}), InputError);
  CHECK_THROWS_AS(RelativeAtomicComplex(corpus::ex28(), {"R", "Q"}), InputError);
  CHECK_THROWS_AS(RelativeAtomicComplex(build_kequal(5, 3), {}, 512), ResourceError);
  RelativeAtomicComplex c(corpus::ex28());
  CHECK_THROWS_AS(c.degree_of(SparseVector::unit(0) + SparseVector::unit(c.atom("R"))), InputError);
}
