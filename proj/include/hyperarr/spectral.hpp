#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hyperarr/bicomplex.hpp"

namespace hyperarr {

/// Ranks at one bidegree of one codim piece. Column p = -(weight-1), internal
/// degree q, total degree p+q.
struct PageEntry {
  int codim;
  int column;
  int internal_degree;
  int total_degree() const { return column + internal_degree; }
  /// rank E_r for r = 0..max_page
  std::vector<std::size_t> rank;
  std::size_t rank_infinity = 0;
  /// rank of d_r leaving this bidegree, r = 0..max_page
  std::vector<std::size_t> differential_rank;
};

struct SpectralSequencePages {
  int max_page = 0;
  int max_total_degree = 0;
  /// Sorted by (codim, total degree, column descending).
  std::vector<PageEntry> entries;

  /// Sum over codim pieces of rank E_r^{p,q}; r < 0 means E_infinity.
  std::size_t rank(int column, int internal_degree, int r) const;
  /// E_infinity summed along total degree, for degrees <= max_total_degree.
  std::map<int, std::size_t> infinity_by_total_degree() const;
};

/// Column filtration spectral sequence of every built piece; ranks for total
/// degrees <= the bicomplex truncation.
SpectralSequencePages spectral_sequence_pages(const BiComplex& b, int max_page);
SpectralSequencePages spectral_sequence_pages(const BiComplexPiece& piece, int max_page);

/// The zig-zag for d_r: extends x (homogeneous, in column p) by terms in
/// columns p+1..p+r-1 so that D of the sum vanishes in columns < p+r, and
/// returns that D (supported in columns >= p+r). nullopt if no extension
/// exists, i.e. x does not survive to E_r.
std::optional<SparseVector> zigzag_differential(const BiComplexPiece& piece, const SparseVector& x, int r);

/// Whether v (homogeneous, supported in columns >= p) represents zero in E_r^p:
/// v lies in Z_{r-1}^{p+1} + B_{r-1}^p.
bool zero_in_page(const BiComplexPiece& piece, const SparseVector& v, int p, int r);

struct PiReport {
  std::map<int, std::size_t> ranks;
  int max_total_degree = 0;
  int max_codim = 0;
  /// Some codim piece above max_codim could reach the reported degrees.
  bool codim_truncated = false;
  /// Letters of degree 1 exist; the complement need not be simply connected.
  bool degree_one_letters = false;
  /// The complex has non-unit generators of degree <= 0, left out of the words.
  bool nonpositive_generators_dropped = false;
  SpectralSequencePages pages;
};

PiReport pi_ranks(const RelativeAtomicComplex& c, int max_total_degree, int max_page,
                  std::optional<int> max_codim = std::nullopt);

} // namespace hyperarr
