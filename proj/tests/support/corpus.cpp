#include "corpus.hpp"

#include <algorithm>
#include <random>

using hyperarr::ColoredEdge;
using hyperarr::EdgeColoredHypergraph;

namespace corpus {

EdgeColoredHypergraph ex28() { return EdgeColoredHypergraph(4, {{{1, 2}, "R"}, {{2, 3}, "B"}, {{3, 4}, "R"}}); }

EdgeColoredHypergraph ex28_2() {
  return EdgeColoredHypergraph(5, {{{1, 2, 3}, "R"}, {{2, 3, 4}, "B"}, {{3, 4, 5}, "G"}});
}

EdgeColoredHypergraph smalldude() {
  return EdgeColoredHypergraph(4, {{{1, 2, 3}, "a"}, {{3, 4}, "b"}, {{2, 4}, "c"}});
}

EdgeColoredHypergraph mcs7() {
  return EdgeColoredHypergraph(7, {{{1, 2, 3}, "l1"},
                                   {{3, 4, 5}, "l2"},
                                   {{5, 6, 7}, "l3"},
                                   {{2, 3, 4}, "l4"},
                                   {{4, 5, 6}, "l5"}});
}

EdgeColoredHypergraph single_color(int c) {
  std::vector<int> e(static_cast<std::size_t>(c + 1));
  for (int i = 0; i <= c; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  return EdgeColoredHypergraph(c + 1, {{e, "x"}});
}

EdgeColoredHypergraph two_disjoint() { return EdgeColoredHypergraph(6, {{{1, 2, 3}, "x"}, {{4, 5, 6}, "y"}}); }

EdgeColoredHypergraph edgeless(int l) { return EdgeColoredHypergraph(l, {}); }

std::vector<EdgeColoredHypergraph> random_instances(int count) {
  std::mt19937 rng(20241018);
  std::vector<EdgeColoredHypergraph> out;
  while (static_cast<int>(out.size()) < count) {
    int l = std::uniform_int_distribution<int>(3, 6)(rng);
    int colors = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<ColoredEdge> edges;
    for (int c = 0; c < colors; ++c) {
      int n_edges = std::uniform_int_distribution<int>(1, 2)(rng);
      for (int e = 0; e < n_edges; ++e) {
        std::vector<int> vs(static_cast<std::size_t>(l));
        for (int v = 0; v < l; ++v) vs[static_cast<std::size_t>(v)] = v + 1;
        std::shuffle(vs.begin(), vs.end(), rng);
        int size = std::uniform_int_distribution<int>(2, std::min(l, 4))(rng);
        vs.resize(static_cast<std::size_t>(size));
        edges.push_back({vs, std::string(1, static_cast<char>('p' + c))});
      }
    }
    out.emplace_back(l, std::move(edges));
  }
  return out;
}

std::vector<Named> acceptance_corpus() {
  std::vector<Named> out{{"ex28", ex28()},
                         {"ex28-2", ex28_2()},
                         {"smalldude", smalldude()},
                         {"kequal(3,2)", hyperarr::build_kequal(3, 2)},
                         {"kequal(4,2)", hyperarr::build_kequal(4, 2)},
                         {"kequal(5,3)", hyperarr::build_kequal(5, 3)},
                         {"MCS7", mcs7()}};
  int i = 0;
  for (auto& h : random_instances()) out.push_back({"random" + std::to_string(i++), std::move(h)});
  return out;
}

} // namespace corpus
