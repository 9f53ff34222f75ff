#include "hyperarr/lattice.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "hyperarr/errors.hpp"

namespace hyperarr {

IntersectionLattice::IntersectionLattice(const EdgeColoredHypergraph& h)
    : vertex_count_(h.vertex_count()), color_names_(h.colors()) {
  // close the atom partitions under joins; each new element is an old one joined with an atom
  std::vector<VertexPartition> atom_parts;
  for (std::size_t c = 0; c < h.color_count(); ++c) {
    if (h.edges_of(c).empty()) continue;
    const auto& p = h.color_partition(c);
    if (std::find(atom_parts.begin(), atom_parts.end(), p) == atom_parts.end()) atom_parts.push_back(p);
  }
  std::unordered_map<VertexPartition, bool, VertexPartitionHash> seen;
  std::vector<VertexPartition> found;
  VertexPartition discrete(h.vertex_count());
  seen[discrete] = true;
  found.push_back(discrete);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    VertexPartition cur = found[queue.front()];
    queue.pop_front();
    for (const auto& a : atom_parts) {
      VertexPartition j = cur.join(a);
      if (seen.emplace(j, true).second) {
        found.push_back(j);
        queue.push_back(found.size() - 1);
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const VertexPartition& a, const VertexPartition& b) {
    int ca = a.codim(), cb = b.codim();
    return ca != cb ? ca < cb : a < b;
  });
  for (auto& p : found) {
    LatticeElement e{closure_of_partition(h, p), p, p.codim()};
    index_[p] = elements_.size();
    by_colors_[e.closed_colors] = elements_.size();
    elements_.push_back(std::move(e));
  }
  for (const auto& a : atom_parts) atoms_.push_back(index_.at(a));
  std::sort(atoms_.begin(), atoms_.end());

  const std::size_t n = elements_.size();
  order_.assign(n * n, false);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      order_[x * n + y] = elements_[x].codim <= elements_[y].codim &&
                          elements_[x].partition.refines(elements_[y].partition);
}

std::size_t IntersectionLattice::join(std::size_t x, std::size_t y) const {
  return index_.at(elements_[x].partition.join(elements_[y].partition));
}

std::size_t IntersectionLattice::meet(std::size_t x, std::size_t y) const {
  // atoms below both generate the meet; their closed color sets intersect to a closed set
  ColorSet common = elements_[x].closed_colors & elements_[y].closed_colors;
  auto it = by_colors_.find(common);
  if (it != by_colors_.end()) return it->second;
  VertexPartition p(vertex_count_);
  for (auto a : atoms_)
    if (elements_[a].closed_colors.is_subset_of(common)) p = p.join(elements_[a].partition);
  return index_.at(p);
}

std::optional<std::size_t> IntersectionLattice::find(const VertexPartition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::int64_t> mobius(const IntersectionLattice& lattice) {
  // elements are sorted by codim, so everything below x precedes it
  std::vector<std::int64_t> mu(lattice.size(), 0);
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    if (x == lattice.bottom()) {
      mu[x] = 1;
      continue;
    }
    std::int64_t s = 0;
    for (std::size_t y = 0; y < x; ++y)
      if (lattice.less(y, x)) s += mu[y];
    mu[x] = -s;
  }
  return mu;
}

IntegerPolynomial characteristic_polynomial(const IntersectionLattice& lattice, int l) {
  auto mu = mobius(lattice);
  IntegerPolynomial chi;
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    int dim = l - lattice[x].codim;
    if (dim < 0) throw InputError("ambient dimension smaller than a lattice codimension");
    chi += IntegerPolynomial::monomial(dim, mu[x]);
  }
  return chi;
}

bool covers(const IntersectionLattice& lattice, std::size_t x, std::size_t y) {
  if (!lattice.less(y, x)) return false;
  for (std::size_t z = 0; z < lattice.size(); ++z)
    if (lattice.less(y, z) && lattice.less(z, x)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> cover_relations(const IntersectionLattice& lattice) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t y = 0; y < lattice.size(); ++y)
    for (std::size_t x = 0; x < lattice.size(); ++x)
      if (covers(lattice, x, y)) out.emplace_back(y, x);
  return out;
}

std::optional<SemimodularityViolation> find_semimodularity_violation(const IntersectionLattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<bool> cov(n * n, false);
  for (auto [lo, hi] : cover_relations(lattice)) cov[hi * n + lo] = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      std::size_t m = lattice.meet(x, y);
      if (!cov[x * n + m] || !cov[y * n + m]) continue;
      std::size_t j = lattice.join(x, y);
      if (!cov[j * n + x] || !cov[j * n + y]) return SemimodularityViolation{x, y, m, j};
    }
  return std::nullopt;
}

bool is_geometric(const IntersectionLattice& lattice) { return !find_semimodularity_violation(lattice); }

bool is_geometric(const EdgeColoredHypergraph& h) { return is_geometric(IntersectionLattice(h)); }

std::string hasse_dot(const IntersectionLattice& lattice) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    os << "  n" << x << " [label=\"codim " << lattice[x].codim << "\\n{";
    bool first = true;
    for (auto c : lattice[x].closed_colors.members()) {
      os << (first ? "" : ",") << lattice.color_names()[c];
      first = false;
    }
    os << "}\"];\n";
  }
  for (auto [lo, hi] : cover_relations(lattice)) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace hyperarr
