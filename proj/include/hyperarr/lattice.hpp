#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperarr/hypergraph.hpp"
#include "hyperarr/polynomial.hpp"

namespace hyperarr {

struct LatticeElement {
  ColorSet closed_colors;
  VertexPartition partition;
  int codim = 0;
};

/// Intersection lattice of the arrangement of an edge colored hypergraph.
/// Elements are the distinct partitions reachable from the atoms by joins,
/// plus the bottom (the ambient space). Element 0 is the bottom; the rest are
/// sorted by codimension, then canonically by partition.
class IntersectionLattice {
public:
  explicit IntersectionLattice(const EdgeColoredHypergraph& h);

  std::size_t size() const { return elements_.size(); }
  const LatticeElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<LatticeElement>& elements() const { return elements_; }
  int vertex_count() const { return vertex_count_; }
  const std::vector<std::string>& color_names() const { return color_names_; }

  std::size_t bottom() const { return 0; }
  /// Distinct closures of single colors, in lattice order.
  const std::vector<std::size_t>& atoms() const { return atoms_; }

  /// x <= y iff partition(x) refines partition(y).
  bool leq(std::size_t x, std::size_t y) const { return order_[x * size() + y]; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

  std::size_t join(std::size_t x, std::size_t y) const;
  std::size_t meet(std::size_t x, std::size_t y) const;
  std::optional<std::size_t> find(const VertexPartition& p) const;

private:
  int vertex_count_ = 0;
  std::vector<std::string> color_names_;
  std::vector<LatticeElement> elements_;
  std::vector<std::size_t> atoms_;
  std::vector<bool> order_;
  std::unordered_map<VertexPartition, std::size_t, VertexPartitionHash> index_;
  std::unordered_map<ColorSet, std::size_t, ColorSetHash> by_colors_;
};

inline IntersectionLattice build_lattice(const EdgeColoredHypergraph& h) { return IntersectionLattice(h); }

/// mu(bottom) = 1, mu(x) = -sum_{y < x} mu(y).
std::vector<std::int64_t> mobius(const IntersectionLattice& lattice);

/// sum_x mu(x) t^(l - codim x)
IntegerPolynomial characteristic_polynomial(const IntersectionLattice& lattice, int l);

/// x covers y: y < x with nothing strictly between.
bool covers(const IntersectionLattice& lattice, std::size_t x, std::size_t y);

/// All (lower, upper) cover pairs, sorted.
std::vector<std::pair<std::size_t, std::size_t>> cover_relations(const IntersectionLattice& lattice);

/// x and y both cover their meet but their join fails to cover one of them.
struct SemimodularityViolation {
  std::size_t x, y, meet, join;
};

std::optional<SemimodularityViolation> find_semimodularity_violation(const IntersectionLattice& lattice);
bool is_geometric(const IntersectionLattice& lattice);
bool is_geometric(const EdgeColoredHypergraph& h);

/// Hasse diagram in DOT; nodes labeled with codimension and closed color set.
std::string hasse_dot(const IntersectionLattice& lattice);

} // namespace hyperarr
