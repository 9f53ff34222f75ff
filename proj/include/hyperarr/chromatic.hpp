#pragma once

#include <cstdint>
#include <vector>

#include "hyperarr/hypergraph.hpp"
#include "hyperarr/polynomial.hpp"

namespace hyperarr {

inline constexpr std::uint64_t default_enumeration_budget = 100'000'000;

/// coloring[v-1] is the color of vertex v.
using VertexColoring = std::vector<int>;

/// Every color has a component that is not monochromatic.
bool is_proper(const EdgeColoredHypergraph& h, const VertexColoring& coloring);

/// Brute force over all t^l colorings. Throws ResourceError past the budget.
std::uint64_t count_proper_colorings(const EdgeColoredHypergraph& h, int t,
                                     std::uint64_t budget = default_enumeration_budget);

enum class PivotRule {
  FewestEdges, // ties broken by color order
  LastColor,
};

/// Deletion-contraction with memoization on the color partitions.
IntegerPolynomial chromatic_polynomial(const EdgeColoredHypergraph& h, PivotRule pivot = PivotRule::FewestEdges);

/// Interpolates count_proper_colorings at t = 0..l+1.
IntegerPolynomial chromatic_polynomial_by_counting(const EdgeColoredHypergraph& h,
                                                   std::uint64_t budget = default_enumeration_budget);

/// Points of [-s,s]^l lying on none of the subspaces X_lambda.
std::uint64_t blass_sagan_count(const EdgeColoredHypergraph& h, int s,
                                std::uint64_t budget = default_enumeration_budget);

} // namespace hyperarr
