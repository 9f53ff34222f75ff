#include "hyperarr/chromatic.hpp"

#include <algorithm>
#include <map>

#include "hyperarr/errors.hpp"

namespace hyperarr {

namespace {

// nontrivial blocks of every color, in color order
std::vector<std::vector<std::vector<int>>> color_blocks(const EdgeColoredHypergraph& h) {
  std::vector<std::vector<std::vector<int>>> out;
  for (std::size_t c = 0; c < h.color_count(); ++c)
    out.push_back(h.edges_of(c).empty() ? std::vector<std::vector<int>>{} : h.color_partition(c).blocks(false));
  return out;
}

bool satisfied(const std::vector<std::vector<int>>& blocks, const std::vector<int>& value) {
  for (const auto& b : blocks)
    for (std::size_t i = 1; i < b.size(); ++i)
      if (value[static_cast<std::size_t>(b[i] - 1)] != value[static_cast<std::size_t>(b[0] - 1)]) return true;
  return false;
}

std::uint64_t checked_power(int base, int exponent, std::uint64_t budget, const char* what) {
  std::uint64_t n = 1;
  for (int i = 0; i < exponent; ++i) {
    n *= static_cast<std::uint64_t>(base);
    if (n > budget) throw ResourceError(what, budget);
  }
  return n;
}

// counts vectors in {lo..lo+width-1}^l on which every color has a non-constant block
std::uint64_t count_satisfying(const EdgeColoredHypergraph& h, int lo, int width, std::uint64_t budget,
                               const char* what) {
  const int l = h.vertex_count();
  if (width <= 0) return l == 0 ? 1 : 0;
  checked_power(width, l, budget, what);
  auto blocks = color_blocks(h);
  std::vector<int> value(static_cast<std::size_t>(l), lo);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& b : blocks)
      if (!satisfied(b, value)) {
        ok = false;
        break;
      }
    if (ok) ++count;
    int i = l - 1;
    while (i >= 0 && value[static_cast<std::size_t>(i)] == lo + width - 1) value[static_cast<std::size_t>(i--)] = lo;
    if (i < 0) break;
    ++value[static_cast<std::size_t>(i)];
  }
  return count;
}

using MemoKey = std::vector<int>;

MemoKey memo_key(const EdgeColoredHypergraph& h) {
  std::vector<std::vector<int>> parts;
  for (std::size_t c = 0; c < h.color_count(); ++c) {
    std::vector<int> flat;
    if (!h.edges_of(c).empty())
      for (const auto& b : h.color_partition(c).blocks(false)) {
        flat.insert(flat.end(), b.begin(), b.end());
        flat.push_back(0);
      }
    parts.push_back(std::move(flat));
  }
  std::sort(parts.begin(), parts.end());
  MemoKey key{h.vertex_count()};
  for (const auto& p : parts) {
    key.insert(key.end(), p.begin(), p.end());
    key.push_back(-1);
  }
  return key;
}

class DeletionContraction {
public:
  explicit DeletionContraction(PivotRule rule) : rule_(rule) {}

  IntegerPolynomial operator()(const EdgeColoredHypergraph& h) {
    if (h.color_count() == 0) return IntegerPolynomial::monomial(h.vertex_count());
    for (std::size_t c = 0; c < h.color_count(); ++c)
      if (h.edges_of(c).empty()) return {};
    auto key = memo_key(h);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::size_t pivot = h.color_count() - 1;
    if (rule_ == PivotRule::FewestEdges) {
      pivot = 0;
      for (std::size_t c = 1; c < h.color_count(); ++c)
        if (h.edges_of(c).size() < h.edges_of(pivot).size()) pivot = c;
    }
    IntegerPolynomial result = (*this)(delete_color(h, pivot));
    EdgeColoredHypergraph contracted = contract_color(h, pivot);
    // a color swallowed by the contraction can no longer be satisfied
    if (contracted.color_count() + 1 == h.color_count()) result -= (*this)(contracted);
    memo_.emplace(std::move(key), result);
    return result;
  }

private:
  PivotRule rule_;
  std::map<MemoKey, IntegerPolynomial> memo_;
};

} // namespace

bool is_proper(const EdgeColoredHypergraph& h, const VertexColoring& coloring) {
  if (coloring.size() != static_cast<std::size_t>(h.vertex_count()))
    throw InputError("coloring must assign a color to every vertex");
  for (const auto& b : color_blocks(h))
    if (!satisfied(b, coloring)) return false;
  return true;
}

std::uint64_t count_proper_colorings(const EdgeColoredHypergraph& h, int t, std::uint64_t budget) {
  if (t < 0) throw InputError("number of colors must be non-negative");
  return count_satisfying(h, 1, t, budget, "proper coloring enumeration");
}

IntegerPolynomial chromatic_polynomial(const EdgeColoredHypergraph& h, PivotRule pivot) {
  if (h.vertex_count() < 1) throw InputError("vertex count must be positive");
  return DeletionContraction(pivot)(h);
}

IntegerPolynomial chromatic_polynomial_by_counting(const EdgeColoredHypergraph& h, std::uint64_t budget) {
  std::vector<std::int64_t> values;
  for (int t = 0; t <= h.vertex_count() + 1; ++t)
    values.push_back(static_cast<std::int64_t>(count_proper_colorings(h, t, budget)));
  return interpolate_at_naturals(values);
}

std::uint64_t blass_sagan_count(const EdgeColoredHypergraph& h, int s, std::uint64_t budget) {
  if (s < 0) throw InputError("box radius must be non-negative");
  return count_satisfying(h, -s, 2 * s + 1, budget, "lattice point enumeration");
}

} // namespace hyperarr
