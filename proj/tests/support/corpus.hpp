#pragma once

#include <string>
#include <vector>

#include "hyperarr/hypergraph.hpp"

namespace corpus {

hyperarr::EdgeColoredHypergraph ex28();
hyperarr::EdgeColoredHypergraph ex28_2();
hyperarr::EdgeColoredHypergraph smalldude();
hyperarr::EdgeColoredHypergraph mcs7();
/// One color, a single edge on c+1 vertices (codim c), l = c+1.
hyperarr::EdgeColoredHypergraph single_color(int c);
/// l = 6, colors on {1,2,3} and {4,5,6}.
hyperarr::EdgeColoredHypergraph two_disjoint();
hyperarr::EdgeColoredHypergraph edgeless(int l);

/// Fixed-seed random hypergraphs with l <= 6 and at most 4 colors.
std::vector<hyperarr::EdgeColoredHypergraph> random_instances(int count = 20);

struct Named {
  std::string name;
  hyperarr::EdgeColoredHypergraph h;
};

/// ex28, ex28-2, smalldude, kequal(3,2), kequal(4,2), kequal(5,3), MCS7, then the random ones.
std::vector<Named> acceptance_corpus();

} // namespace corpus
