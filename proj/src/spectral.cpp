#include "hyperarr/spectral.hpp"

#include <algorithm>
#include <tuple>

#include "hyperarr/errors.hpp"

namespace hyperarr {

std::size_t SpectralSequencePages::rank(int column, int internal_degree, int r) const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (e.column == column && e.internal_degree == internal_degree)
      n += r < 0 || r > max_page ? e.rank_infinity : e.rank[static_cast<std::size_t>(r)];
  return n;
}

std::map<int, std::size_t> SpectralSequencePages::infinity_by_total_degree() const {
  std::map<int, std::size_t> out;
  for (const auto& e : entries)
    if (e.total_degree() <= max_total_degree) out[e.total_degree()] += e.rank_infinity;
  return out;
}

namespace {

// Pairs from a filtered reduction: an element born in column p_low and killed
// by an element in column p_src stays on pages r <= p_low - p_src.
struct PairInfo {
  std::vector<int> gap; // per basis element; -1 = unpaired
};

} // namespace

SpectralSequencePages spectral_sequence_pages(const BiComplexPiece& piece, int max_page) {
  const auto& basis = piece.basis();
  const int top = piece.max_total_degree();
  std::vector<int> gap(basis.size(), -1);
  std::vector<bool> is_source(basis.size(), false);
  std::map<int, bool> degrees;
  for (const auto& b : basis) degrees[b.total_degree] = true;
  for (auto [k, unused] : degrees) {
    if (k > top) continue;
    auto [lo, hi] = piece.degree_range(k);
    std::vector<SparseVector> cols;
    for (std::size_t i = lo; i < hi; ++i) cols.push_back(piece.total_differential(i));
    auto red = reduce_columns(std::move(cols));
    for (std::size_t j = 0; j < red.low.size(); ++j) {
      if (!red.low[j]) continue;
      std::size_t src = lo + j, dst = *red.low[j];
      int g = basis[dst].column - basis[src].column;
      gap[src] = gap[dst] = g;
      is_source[src] = true;
    }
  }
  std::map<std::tuple<int, int>, PageEntry> by_bidegree;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& b = basis[i];
    if (b.total_degree > top) continue;
    auto& e = by_bidegree[{b.total_degree, -b.column}];
    if (e.rank.empty()) {
      e.codim = piece.codim();
      e.column = b.column;
      e.internal_degree = b.total_degree - b.column;
      e.rank.assign(static_cast<std::size_t>(max_page + 1), 0);
      e.differential_rank.assign(static_cast<std::size_t>(max_page + 1), 0);
    }
    for (int r = 0; r <= max_page; ++r)
      if (gap[i] < 0 || gap[i] >= r) ++e.rank[static_cast<std::size_t>(r)];
    if (gap[i] < 0) ++e.rank_infinity;
    if (is_source[i] && gap[i] <= max_page) ++e.differential_rank[static_cast<std::size_t>(gap[i])];
  }
  SpectralSequencePages pages;
  pages.max_page = max_page;
  pages.max_total_degree = top;
  for (auto& [key, e] : by_bidegree) pages.entries.push_back(std::move(e));
  return pages;
}

SpectralSequencePages spectral_sequence_pages(const BiComplex& b, int max_page) {
  SpectralSequencePages all;
  all.max_page = max_page;
  all.max_total_degree = b.max_total_degree();
  for (const auto& [k, piece] : b.pieces()) {
    if (k > b.max_codim()) continue;
    auto p = spectral_sequence_pages(piece, max_page);
    for (auto& e : p.entries) all.entries.push_back(std::move(e));
  }
  return all;
}

namespace {

int column_of(const BiComplexPiece& piece, const SparseVector& x) {
  int p = piece.basis()[x.first_index()].column;
  for (const auto& [i, c] : x.entries()) p = std::min(p, piece.basis()[i].column);
  return p;
}

int degree_of(const BiComplexPiece& piece, const SparseVector& x) {
  int k = piece.basis()[x.first_index()].total_degree;
  for (const auto& [i, c] : x.entries())
    if (piece.basis()[i].total_degree != k) throw InputError("element is not homogeneous");
  return k;
}

// basis elements of degree k with column in [lo, hi]
std::vector<std::size_t> span_of(const BiComplexPiece& piece, int k, int lo, int hi) {
  std::vector<std::size_t> out;
  auto [b, e] = piece.degree_range(k);
  for (std::size_t i = b; i < e; ++i)
    if (piece.basis()[i].column >= lo && piece.basis()[i].column <= hi) out.push_back(i);
  return out;
}

SparseVector combine(const std::vector<std::size_t>& idx, const SparseVector& coeffs) {
  std::vector<SparseVector::Entry> entries;
  for (const auto& [j, c] : coeffs.entries()) entries.emplace_back(idx[j], c);
  return SparseVector::from_entries(std::move(entries));
}

// Z_s^q in degree k: elements of F^q whose D lies in F^{q+s}
std::vector<SparseVector> cycles_up_to(const BiComplexPiece& piece, int k, int q, int s) {
  auto idx = span_of(piece, k, q, 0);
  std::vector<SparseVector> out;
  if (s == 0) {
    for (auto i : idx) out.push_back(SparseVector::unit(i));
    return out;
  }
  std::vector<SparseVector> images;
  for (auto i : idx) images.push_back(piece.restrict_columns(piece.total_differential(i), q, q + s - 1));
  for (const auto& rel : kernel_basis(images)) out.push_back(combine(idx, rel));
  return out;
}

} // namespace

std::optional<SparseVector> zigzag_differential(const BiComplexPiece& piece, const SparseVector& x, int r) {
  if (r < 0) throw InputError("page index must be non-negative");
  if (x.empty()) return SparseVector{};
  const int k = degree_of(piece, x);
  const int p = column_of(piece, x);
  SparseVector dx = piece.apply(x);
  auto idx = span_of(piece, k, p + 1, p + r - 1);
  std::vector<SparseVector> images;
  for (auto i : idx) images.push_back(piece.restrict_columns(piece.total_differential(i), p, p + r - 1));
  RowEchelon e;
  for (const auto& v : images) e.insert(v);
  SparseVector target = piece.restrict_columns(dx, p, p + r - 1);
  target *= -1;
  auto coeffs = e.solve(target);
  if (!coeffs) return std::nullopt;
  SparseVector lifted = x + combine(idx, *coeffs);
  SparseVector out = piece.apply(lifted);
  if (!piece.restrict_columns(out, p, p + r - 1).empty()) throw ConsistencyError("zig-zag did not clear columns");
  return out;
}

bool zero_in_page(const BiComplexPiece& piece, const SparseVector& v, int p, int r) {
  if (v.empty()) return true;
  const int k = degree_of(piece, v);
  RowEchelon den;
  if (r == 0) {
    for (auto i : span_of(piece, k, p + 1, 0)) den.insert(SparseVector::unit(i));
  } else {
    for (const auto& z : cycles_up_to(piece, k, p + 1, r - 1)) den.insert(z);
  }
  if (r >= 1)
    for (const auto& z : cycles_up_to(piece, k - 1, p - r + 1, r - 1)) den.insert(piece.apply(z));
  return den.contains(v);
}

PiReport pi_ranks(const RelativeAtomicComplex& c, int max_total_degree, int max_page, std::optional<int> max_codim) {
  BiComplexOptions opts;
  opts.max_total_degree = max_total_degree;
  opts.max_codim = max_codim;
  BiComplex b(c, opts);
  PiReport report;
  report.max_total_degree = max_total_degree;
  report.max_codim = b.max_codim();
  report.codim_truncated = b.codim_truncated();
  for (auto a : b.algebra().letters())
    if (c.degree(a) == 1) report.degree_one_letters = true;
  for (AtomMask m = 1; m < c.generator_count(); ++m)
    if (c.degree(m) <= 0) report.nonpositive_generators_dropped = true;
  // beyond the number of columns every page equals E_infinity
  report.pages = spectral_sequence_pages(b, max_page);
  for (int k = 1; k <= max_total_degree; ++k) report.ranks[k] = 0;
  for (auto [k, n] : report.pages.infinity_by_total_degree())
    if (k >= 1) report.ranks[k] += n;
  return report;
}

} // namespace hyperarr
