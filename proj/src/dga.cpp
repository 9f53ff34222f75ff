#include "hyperarr/dga.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "hyperarr/errors.hpp"

namespace hyperarr {

RelativeAtomicComplex::RelativeAtomicComplex(const EdgeColoredHypergraph& h, AtomOrder order,
                                             std::uint64_t max_generators)
    : order_(order.empty() ? h.colors() : std::move(order)) {
  const std::size_t n = order_.size();
  if (n > 30 || (std::uint64_t{1} << n) > max_generators)
    throw ResourceError("relative atomic complex has 2^" + std::to_string(n) + " generators", max_generators);
  {
    auto sorted = order_, all = h.colors();
    std::sort(sorted.begin(), sorted.end());
    std::sort(all.begin(), all.end());
    if (sorted != all) throw InputError("atom order must list every color exactly once");
  }
  for (std::size_t c = 0; c < h.color_count(); ++c)
    if (h.edges_of(c).empty()) throw InputError("color '" + h.color_name(c) + "' has no edges");
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (int v : h.edge(i))
      if (v < 1 || v > h.vertex_count()) throw InputError("edge vertex out of range");

  std::vector<std::vector<const std::vector<int>*>> atom_edges(n);
  for (std::size_t b = 0; b < n; ++b)
    for (auto e : h.edges_of(h.color_index(order_[b]))) atom_edges[b].push_back(&h.edge(e));

  const std::size_t total = std::size_t{1} << n;
  codim_.assign(total, 0);
  std::vector<int> parent(static_cast<std::size_t>(h.vertex_count() + 1));
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t m = 1; m < total; ++m) {
    std::iota(parent.begin(), parent.end(), 0);
    int merges = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (!((m >> b) & 1u)) continue;
      for (const auto* e : atom_edges[b])
        for (std::size_t k = 1; k < e->size(); ++k) {
          int x = find((*e)[0]), y = find((*e)[k]);
          if (x != y) {
            parent[y] = x;
            ++merges;
          }
        }
    }
    codim_[m] = merges;
  }
  for (std::size_t m = 0; m < total; ++m) {
    int d = degree(static_cast<AtomMask>(m));
    by_degree_[d].push_back(static_cast<AtomMask>(m));
  }
  min_degree_ = by_degree_.begin()->first;
  max_degree_ = by_degree_.rbegin()->first;
}

const std::vector<AtomMask>& RelativeAtomicComplex::generators_in_degree(int d) const {
  static const std::vector<AtomMask> none;
  auto it = by_degree_.find(d);
  return it == by_degree_.end() ? none : it->second;
}

AtomMask RelativeAtomicComplex::atom(const std::string& color) const {
  auto it = std::find(order_.begin(), order_.end(), color);
  if (it == order_.end()) throw InputError("unknown color '" + color + "'");
  return AtomMask{1} << (it - order_.begin());
}

AtomMask RelativeAtomicComplex::mask_of(const std::vector<std::string>& colors) const {
  AtomMask m = 0;
  for (const auto& c : colors) m |= atom(c);
  return m;
}

std::vector<std::string> RelativeAtomicComplex::colors_of(AtomMask sigma) const {
  std::vector<std::string> out;
  for (std::size_t b = 0; b < order_.size(); ++b)
    if ((sigma >> b) & 1u) out.push_back(order_[b]);
  return out;
}

std::string RelativeAtomicComplex::label(AtomMask sigma) const {
  std::string s = "a{";
  bool first = true;
  for (const auto& c : colors_of(sigma)) {
    s += (first ? "" : ",") + c;
    first = false;
  }
  return s + "}";
}

bool RelativeAtomicComplex::removable(AtomMask sigma, int bit) const {
  AtomMask b = AtomMask{1} << bit;
  return (sigma & b) && codim_[sigma & ~b] == codim_[sigma];
}

std::vector<SignedMask> RelativeAtomicComplex::differential(AtomMask sigma) const {
  std::vector<SignedMask> out;
  int j = 0;
  for (int b = 0; b < static_cast<int>(order_.size()); ++b) {
    if (!((sigma >> b) & 1u)) continue;
    ++j;
    if (removable(sigma, b)) out.push_back({sigma & ~(AtomMask{1} << b), j % 2 ? -1 : 1});
  }
  return out;
}

int RelativeAtomicComplex::product_sign(AtomMask sigma, AtomMask tau) const {
  if (sigma & tau) return 0;
  if (codim_[sigma] + codim_[tau] != codim_[sigma | tau]) return 0;
  // inversions of the concatenation sigma.tau: pairs i in sigma, j in tau with i > j
  int inv = 0;
  for (AtomMask t = tau; t; t &= t - 1) {
    AtomMask below_or_at = (t & -t) | ((t & -t) - 1);
    inv += std::popcount(sigma & ~below_or_at);
  }
  return inv % 2 ? -1 : 1;
}

SparseVector RelativeAtomicComplex::d(const SparseVector& x) const {
  std::vector<SparseVector::Entry> out;
  for (const auto& [m, c] : x.entries())
    for (auto [t, s] : differential(static_cast<AtomMask>(m))) out.emplace_back(t, s * c);
  return SparseVector::from_entries(std::move(out));
}

SparseVector RelativeAtomicComplex::multiply(const SparseVector& x, const SparseVector& y) const {
  std::vector<SparseVector::Entry> out;
  for (const auto& [a, ca] : x.entries())
    for (const auto& [b, cb] : y.entries()) {
      int s = product_sign(static_cast<AtomMask>(a), static_cast<AtomMask>(b));
      if (s) out.emplace_back(a | b, s * ca * cb);
    }
  return SparseVector::from_entries(std::move(out));
}

int RelativeAtomicComplex::degree_of(const SparseVector& x) const {
  if (x.empty()) throw InputError("zero cochain has no degree");
  int d = degree(static_cast<AtomMask>(x.first_index()));
  for (const auto& [m, c] : x.entries())
    if (degree(static_cast<AtomMask>(m)) != d) throw InputError("cochain is not homogeneous");
  return d;
}

namespace {

SparseVector lift(const SparseVector& coeffs, const std::vector<AtomMask>& basis) {
  std::vector<SparseVector::Entry> out;
  for (const auto& [i, c] : coeffs.entries()) out.emplace_back(basis[i], c);
  return SparseVector::from_entries(std::move(out));
}

} // namespace

CohomologyReport cohomology(const RelativeAtomicComplex& c, int max_degree) {
  CohomologyReport report;
  RowEchelon image; // coboundaries landing in the current degree
  for (int k = c.min_degree(); k <= max_degree; ++k) {
    const auto& basis = c.generators_in_degree(k);
    RowEchelon next;
    for (auto m : basis) next.insert(c.d(SparseVector::unit(m)));
    RowEchelon classes = image;
    std::vector<SparseVector> reps;
    for (const auto& rel : next.relations()) {
      SparseVector z = lift(rel, basis);
      if (classes.insert(z)) reps.push_back(image.reduce(z));
    }
    report.betti[k] = reps.size();
    report.representatives[k] = std::move(reps);
    image = std::move(next);
  }
  return report;
}

const RowEchelon& CoboundarySolver::image_from(int degree) {
  auto it = cache_.find(degree);
  if (it != cache_.end()) return it->second.first;
  auto basis = c_.generators_in_degree(degree);
  if (reverse_) std::reverse(basis.begin(), basis.end());
  RowEchelon e;
  for (auto m : basis) e.insert(c_.d(SparseVector::unit(m)));
  auto& slot = cache_[degree];
  slot = {std::move(e), std::move(basis)};
  return slot.first;
}

std::optional<SparseVector> CoboundarySolver::solve(const SparseVector& target) {
  if (target.empty()) return SparseVector{};
  int k = c_.degree_of(target);
  const RowEchelon& e = image_from(k - 1);
  auto coeffs = e.solve(target);
  if (!coeffs) return std::nullopt;
  return lift(*coeffs, cache_.at(k - 1).second);
}

} // namespace hyperarr
