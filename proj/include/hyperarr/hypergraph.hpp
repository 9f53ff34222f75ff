#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperarr/color_set.hpp"

namespace hyperarr {

struct ColoredEdge {
  std::vector<int> vertices;
  std::string color;
};

/// Set partition of {1..n}. Each vertex is labeled by the smallest vertex of
/// its block, which makes equality and hashing canonical.
class VertexPartition {
public:
  VertexPartition() = default;
  /// The discrete partition (all singletons).
  explicit VertexPartition(int vertex_count);

  static VertexPartition from_blocks(int vertex_count, const std::vector<std::vector<int>>& blocks);

  int vertex_count() const { return static_cast<int>(label_.size()); }
  int block_of(int v) const { return label_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<int>& labels() const { return label_; }

  /// Blocks sorted by minimum element; singletons included only on request.
  std::vector<std::vector<int>> blocks(bool include_singletons = true) const;

  /// Sum over blocks of (|B| - 1).
  int codim() const;
  bool refines(const VertexPartition& coarser) const;
  /// Finest common coarsening.
  VertexPartition join(const VertexPartition& other) const;

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
  friend auto operator<=>(const VertexPartition& a, const VertexPartition& b) { return a.label_ <=> b.label_; }

private:
  std::vector<int> label_;
};

struct VertexPartitionHash {
  std::size_t operator()(const VertexPartition& p) const;
};

/// Hypergraph on vertices {1..l} whose edges carry colors. Colors are string
/// identifiers kept in a canonical order (lexicographic unless an explicit
/// order is supplied); a color is addressed internally by its position.
///
/// Construction does not reject malformed edges so that validate() can report
/// them; the combinatorial operations throw InputError on out-of-range vertices.
class EdgeColoredHypergraph {
public:
  EdgeColoredHypergraph() = default;
  EdgeColoredHypergraph(int vertex_count, std::vector<ColoredEdge> edges,
                        std::vector<std::string> color_order = {});

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t color_count() const { return colors_.size(); }

  const std::vector<int>& edge(std::size_t i) const { return edges_[i]; }
  std::size_t edge_color(std::size_t i) const { return edge_color_[i]; }
  const std::vector<std::size_t>& edges_of(std::size_t color) const { return color_edges_[color]; }

  const std::vector<std::string>& colors() const { return colors_; }
  const std::string& color_name(std::size_t c) const { return colors_[c]; }
  /// Throws InputError for an unknown identifier.
  std::size_t color_index(std::string_view name) const;

  ColorSet no_colors() const { return ColorSet(colors_.size()); }
  ColorSet all_colors() const { return ColorSet::full(colors_.size()); }
  ColorSet color_set(const std::vector<std::string>& names) const;
  ColorSet single(std::size_t color) const { return ColorSet::single(colors_.size(), color); }
  std::vector<std::string> names(const ColorSet& s) const;

  std::vector<ColoredEdge> colored_edges() const;

  /// Partition of a single color's edges; cached at construction.
  const VertexPartition& color_partition(std::size_t color) const { return color_partition_[color]; }

private:
  int vertex_count_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<std::size_t> edge_color_;
  std::vector<std::string> colors_;
  std::vector<std::vector<std::size_t>> color_edges_;
  std::vector<VertexPartition> color_partition_;
};

/// Vertex partition induced by the connected components of the edges colored by gamma.
VertexPartition partition_of(const EdgeColoredHypergraph& h, const ColorSet& gamma);

/// Vertex sets (size >= 2) of the connected components of C^{-1}(gamma), sorted by minimum.
std::vector<std::vector<int>> connected_components(const EdgeColoredHypergraph& h, const ColorSet& gamma);

int codim_of_colorset(const EdgeColoredHypergraph& h, const ColorSet& gamma);

/// Every component of gamma lies inside a component of other.
bool refines(const EdgeColoredHypergraph& h, const ColorSet& gamma, const ColorSet& other);
bool equivalent(const EdgeColoredHypergraph& h, const ColorSet& a, const ColorSet& b);

/// Largest color set equivalent to gamma.
ColorSet closure(const EdgeColoredHypergraph& h, const ColorSet& gamma);
/// Closure computed from an already known partition of gamma.
ColorSet closure_of_partition(const EdgeColoredHypergraph& h, const VertexPartition& p);

bool multiplicative(const EdgeColoredHypergraph& h, const ColorSet& a, const ColorSet& b);

/// closure(a) ∩ closure(b); the empty set stands for the ambient space.
ColorSet meet_colorsets(const EdgeColoredHypergraph& h, const ColorSet& a, const ColorSet& b);

EdgeColoredHypergraph delete_color(const EdgeColoredHypergraph& h, std::size_t color);
/// Identifies the vertices of each component of the color, re-indexes densely
/// (merged vertex takes the rank of its block minimum), then drops collapsed
/// edges and colors left without edges.
EdgeColoredHypergraph contract_color(const EdgeColoredHypergraph& h, std::size_t color);

struct Diagnostic {
  enum class Kind { BadVertexCount, EdgeTooSmall, VertexOutOfRange, EdgelessColor, ColorRefinement };
  Kind kind;
  std::optional<std::size_t> edge;
  std::string message;
};

std::vector<Diagnostic> validate(const EdgeColoredHypergraph& h, bool strict);

/// All k-subsets of {1..l}, each with its own color. Throws InputError unless 2 <= k <= l.
EdgeColoredHypergraph build_kequal(int l, int k);

} // namespace hyperarr
