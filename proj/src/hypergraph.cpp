#include "hyperarr/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hyperarr/errors.hpp"

namespace hyperarr {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n + 1)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // keeps the smaller root so that roots are block minima
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

private:
  std::vector<int> parent_;
};

void check_vertices(int n, const std::vector<int>& e) {
  for (int v : e)
    if (v < 1 || v > n) throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
}

} // namespace

VertexPartition::VertexPartition(int vertex_count) : label_(static_cast<std::size_t>(vertex_count)) {
  std::iota(label_.begin(), label_.end(), 1);
}

VertexPartition VertexPartition::from_blocks(int vertex_count, const std::vector<std::vector<int>>& blocks) {
  DisjointSets ds(vertex_count);
  for (const auto& b : blocks) {
    check_vertices(vertex_count, b);
    for (std::size_t i = 1; i < b.size(); ++i) ds.unite(b[0], b[i]);
  }
  VertexPartition p(vertex_count);
  for (int v = 1; v <= vertex_count; ++v) p.label_[static_cast<std::size_t>(v - 1)] = ds.find(v);
  return p;
}

std::vector<std::vector<int>> VertexPartition::blocks(bool include_singletons) const {
  std::map<int, std::vector<int>> by_label;
  for (int v = 1; v <= vertex_count(); ++v) by_label[block_of(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [label, b] : by_label)
    if (include_singletons || b.size() >= 2) out.push_back(std::move(b));
  return out;
}

int VertexPartition::codim() const {
  int roots = 0;
  for (int v = 1; v <= vertex_count(); ++v)
    if (block_of(v) == v) ++roots;
  return vertex_count() - roots;
}

bool VertexPartition::refines(const VertexPartition& coarser) const {
  for (int v = 1; v <= vertex_count(); ++v)
    if (coarser.block_of(v) != coarser.block_of(block_of(v))) return false;
  return true;
}

VertexPartition VertexPartition::join(const VertexPartition& other) const {
  DisjointSets ds(vertex_count());
  for (int v = 1; v <= vertex_count(); ++v) {
    ds.unite(v, block_of(v));
    ds.unite(v, other.block_of(v));
  }
  VertexPartition p(vertex_count());
  for (int v = 1; v <= vertex_count(); ++v) p.label_[static_cast<std::size_t>(v - 1)] = ds.find(v);
  return p;
}

std::size_t VertexPartitionHash::operator()(const VertexPartition& p) const {
  std::size_t h = 0;
  for (int x : p.labels()) h = h * 1000003u + static_cast<std::size_t>(x);
  return h;
}

EdgeColoredHypergraph::EdgeColoredHypergraph(int vertex_count, std::vector<ColoredEdge> edges,
                                             std::vector<std::string> color_order)
    : vertex_count_(vertex_count) {
  if (color_order.empty()) {
    std::set<std::string> names;
    for (const auto& e : edges) names.insert(e.color);
    colors_.assign(names.begin(), names.end());
  } else {
    std::set<std::string> seen;
    for (const auto& c : color_order)
      if (!seen.insert(c).second) throw InputError("color '" + c + "' repeated in color order");
    for (const auto& e : edges)
      if (!seen.count(e.color)) throw InputError("color '" + e.color + "' missing from color order");
    colors_ = std::move(color_order);
  }
  color_edges_.resize(colors_.size());
  for (auto& e : edges) {
    std::vector<int> vs = std::move(e.vertices);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::size_t c = color_index(e.color);
    color_edges_[c].push_back(edges_.size());
    edges_.push_back(std::move(vs));
    edge_color_.push_back(c);
  }
  bool in_range = vertex_count_ >= 1;
  for (const auto& e : edges_)
    for (int v : e)
      if (v < 1 || v > vertex_count_) in_range = false;
  // partitions are only meaningful for well-formed vertex data
  if (in_range) {
    color_partition_.reserve(colors_.size());
    for (std::size_t c = 0; c < colors_.size(); ++c) {
      std::vector<std::vector<int>> blocks;
      for (auto i : color_edges_[c]) blocks.push_back(edges_[i]);
      color_partition_.push_back(VertexPartition::from_blocks(vertex_count_, blocks));
    }
  }
}

std::size_t EdgeColoredHypergraph::color_index(std::string_view name) const {
  for (std::size_t i = 0; i < colors_.size(); ++i)
    if (colors_[i] == name) return i;
  throw InputError("unknown color '" + std::string(name) + "'");
}

ColorSet EdgeColoredHypergraph::color_set(const std::vector<std::string>& names) const {
  ColorSet s = no_colors();
  for (const auto& n : names) s.insert(color_index(n));
  return s;
}

std::vector<std::string> EdgeColoredHypergraph::names(const ColorSet& s) const {
  std::vector<std::string> out;
  for (auto i : s.members()) out.push_back(colors_[i]);
  return out;
}

std::vector<ColoredEdge> EdgeColoredHypergraph::colored_edges() const {
  std::vector<ColoredEdge> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) out.push_back({edges_[i], colors_[edge_color_[i]]});
  return out;
}

namespace {

void require_well_formed(const EdgeColoredHypergraph& h) {
  if (h.vertex_count() < 1) throw InputError("vertex count must be positive");
  for (std::size_t i = 0; i < h.edge_count(); ++i) check_vertices(h.vertex_count(), h.edge(i));
}

void require_universe(const EdgeColoredHypergraph& h, const ColorSet& s) {
  if (s.universe() != h.color_count())
    throw InputError("color set does not belong to this hypergraph");
}

} // namespace

VertexPartition partition_of(const EdgeColoredHypergraph& h, const ColorSet& gamma) {
  require_well_formed(h);
  require_universe(h, gamma);
  DisjointSets ds(h.vertex_count());
  for (auto c : gamma.members())
    for (auto i : h.edges_of(c)) {
      const auto& e = h.edge(i);
      for (std::size_t k = 1; k < e.size(); ++k) ds.unite(e[0], e[k]);
    }
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(h.vertex_count() + 1));
  for (int v = 1; v <= h.vertex_count(); ++v) blocks[static_cast<std::size_t>(ds.find(v))].push_back(v);
  return VertexPartition::from_blocks(h.vertex_count(), blocks);
}

std::vector<std::vector<int>> connected_components(const EdgeColoredHypergraph& h, const ColorSet& gamma) {
  return partition_of(h, gamma).blocks(false);
}

int codim_of_colorset(const EdgeColoredHypergraph& h, const ColorSet& gamma) {
  return partition_of(h, gamma).codim();
}

bool refines(const EdgeColoredHypergraph& h, const ColorSet& gamma, const ColorSet& other) {
  return partition_of(h, gamma).refines(partition_of(h, other));
}

bool equivalent(const EdgeColoredHypergraph& h, const ColorSet& a, const ColorSet& b) {
  return partition_of(h, a) == partition_of(h, b);
}

ColorSet closure_of_partition(const EdgeColoredHypergraph& h, const VertexPartition& p) {
  ColorSet out = h.no_colors();
  for (std::size_t c = 0; c < h.color_count(); ++c)
    if (!h.edges_of(c).empty() && h.color_partition(c).refines(p)) out.insert(c);
  return out;
}

ColorSet closure(const EdgeColoredHypergraph& h, const ColorSet& gamma) {
  return closure_of_partition(h, partition_of(h, gamma));
}

bool multiplicative(const EdgeColoredHypergraph& h, const ColorSet& a, const ColorSet& b) {
  return codim_of_colorset(h, a) + codim_of_colorset(h, b) == codim_of_colorset(h, a | b);
}

ColorSet meet_colorsets(const EdgeColoredHypergraph& h, const ColorSet& a, const ColorSet& b) {
  return closure(h, a) & closure(h, b);
}

EdgeColoredHypergraph delete_color(const EdgeColoredHypergraph& h, std::size_t color) {
  if (color >= h.color_count()) throw InputError("color index out of range");
  std::vector<ColoredEdge> edges;
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    if (h.edge_color(i) != color) edges.push_back({h.edge(i), h.color_name(h.edge_color(i))});
  std::vector<std::string> order;
  for (std::size_t c = 0; c < h.color_count(); ++c)
    if (c != color) order.push_back(h.color_name(c));
  return EdgeColoredHypergraph(h.vertex_count(), std::move(edges), std::move(order));
}

EdgeColoredHypergraph contract_color(const EdgeColoredHypergraph& h, std::size_t color) {
  if (color >= h.color_count()) throw InputError("color index out of range");
  require_well_formed(h);
  const VertexPartition& p = h.color_partition(color);
  // new index of a vertex = rank of its block minimum among all block minima
  std::vector<int> rank(static_cast<std::size_t>(h.vertex_count() + 1), 0);
  int next = 0;
  for (int v = 1; v <= h.vertex_count(); ++v)
    if (p.block_of(v) == v) rank[static_cast<std::size_t>(v)] = ++next;
  std::vector<ColoredEdge> edges;
  std::vector<bool> keeps(h.color_count(), false);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (h.edge_color(i) == color) continue;
    std::vector<int> vs;
    for (int v : h.edge(i)) vs.push_back(rank[static_cast<std::size_t>(p.block_of(v))]);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() < 2) continue;
    keeps[h.edge_color(i)] = true;
    edges.push_back({std::move(vs), h.color_name(h.edge_color(i))});
  }
  std::vector<std::string> order;
  for (std::size_t c = 0; c < h.color_count(); ++c)
    if (keeps[c]) order.push_back(h.color_name(c));
  return EdgeColoredHypergraph(next, std::move(edges), std::move(order));
}

std::vector<Diagnostic> validate(const EdgeColoredHypergraph& h, bool strict) {
  using K = Diagnostic::Kind;
  std::vector<Diagnostic> out;
  if (h.vertex_count() < 1) out.push_back({K::BadVertexCount, std::nullopt, "vertex count must be positive"});
  bool ranges_ok = true;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    if (e.size() < 2)
      out.push_back({K::EdgeTooSmall, i, "edge " + std::to_string(i) + " has fewer than two distinct vertices"});
    for (int v : e)
      if (v < 1 || v > h.vertex_count()) {
        ranges_ok = false;
        out.push_back({K::VertexOutOfRange, i,
                       "edge " + std::to_string(i) + " has vertex " + std::to_string(v) + " outside 1.." +
                           std::to_string(h.vertex_count())});
      }
  }
  for (std::size_t c = 0; c < h.color_count(); ++c)
    if (h.edges_of(c).empty())
      out.push_back({K::EdgelessColor, std::nullopt, "color '" + h.color_name(c) + "' has no edges"});
  if (strict && ranges_ok && h.vertex_count() >= 1) {
    for (std::size_t a = 0; a < h.color_count(); ++a)
      for (std::size_t b = 0; b < h.color_count(); ++b) {
        if (a == b || h.edges_of(a).empty() || h.edges_of(b).empty()) continue;
        if (h.color_partition(a).refines(h.color_partition(b)))
          out.push_back({K::ColorRefinement, std::nullopt,
                         "color '" + h.color_name(a) + "' refines color '" + h.color_name(b) + "'"});
      }
  }
  return out;
}

EdgeColoredHypergraph build_kequal(int l, int k) {
  if (k < 2 || k > l) throw InputError("k-equal arrangement needs 2 <= k <= l");
  const int width = static_cast<int>(std::to_string(l).size());
  auto pad = [width](int v) {
    std::string s = std::to_string(v);
    return std::string(static_cast<std::size_t>(width) - s.size(), '0') + s;
  };
  std::vector<ColoredEdge> edges;
  std::vector<int> subset(static_cast<std::size_t>(k));
  std::iota(subset.begin(), subset.end(), 1);
  while (true) {
    std::string name;
    for (std::size_t i = 0; i < subset.size(); ++i) name += (i ? "." : "") + pad(subset[i]);
    edges.push_back({subset, name});
    int i = k - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == l - k + 1 + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
  return EdgeColoredHypergraph(l, std::move(edges));
}

} // namespace hyperarr
