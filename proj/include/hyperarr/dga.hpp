#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperarr/hypergraph.hpp"
#include "hyperarr/linalg.hpp"

namespace hyperarr {

/// Subset sigma of the atoms; bit i is the i-th color of the atom order.
using AtomMask = std::uint32_t;

/// Linear order on the colors, given by name.
using AtomOrder = std::vector<std::string>;

inline constexpr std::uint64_t default_max_generators = std::uint64_t{1} << 20;
inline constexpr int default_max_degree = 16;

struct SignedMask {
  AtomMask mask;
  int sign;
};

/// Relative atomic complex over Q: one generator a_sigma for every subset
/// sigma of the colors, in degree 2 codim(join sigma) - |sigma|. Cochains are
/// SparseVectors indexed by AtomMask.
class RelativeAtomicComplex {
public:
  /// An empty order means the hypergraph's color order. Throws ResourceError
  /// if 2^|colors| exceeds max_generators.
  explicit RelativeAtomicComplex(const EdgeColoredHypergraph& h, AtomOrder order = {},
                                 std::uint64_t max_generators = default_max_generators);

  std::size_t atom_count() const { return order_.size(); }
  const AtomOrder& order() const { return order_; }
  std::size_t generator_count() const { return codim_.size(); }

  int codim(AtomMask sigma) const { return codim_[sigma]; }
  int degree(AtomMask sigma) const { return 2 * codim_[sigma] - std::popcount(sigma); }
  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }
  /// Generators of the given degree, increasing by mask.
  const std::vector<AtomMask>& generators_in_degree(int d) const;

  AtomMask atom(const std::string& color) const;
  AtomMask mask_of(const std::vector<std::string>& colors) const;
  std::vector<std::string> colors_of(AtomMask sigma) const;
  /// e.g. "a{R,B}"; the unit is "a{}".
  std::string label(AtomMask sigma) const;

  /// Removing lambda from sigma does not change the join.
  bool removable(AtomMask sigma, int bit) const;
  /// sum over removable lambda of (-1)^j a_{sigma - lambda}, j the 1-based position of lambda.
  std::vector<SignedMask> differential(AtomMask sigma) const;
  /// Sign of a_sigma a_tau = sign a_{sigma|tau}, or 0 when not multiplicative.
  int product_sign(AtomMask sigma, AtomMask tau) const;

  SparseVector d(const SparseVector& x) const;
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  /// Degree of a nonzero homogeneous cochain; throws InputError otherwise.
  int degree_of(const SparseVector& x) const;

private:
  AtomOrder order_;
  std::vector<int> codim_;
  int min_degree_ = 0, max_degree_ = 0;
  std::map<int, std::vector<AtomMask>> by_degree_;
};

struct CohomologyReport {
  std::map<int, std::size_t> betti;
  /// Cocycles whose classes form a basis, reduced modulo coboundaries.
  std::map<int, std::vector<SparseVector>> representatives;
};

CohomologyReport cohomology(const RelativeAtomicComplex& c, int max_degree = default_max_degree);

/// Solves d x = target degree by degree, caching one elimination per degree.
class CoboundarySolver {
public:
  /// reverse_pivots inserts generators in decreasing mask order, which picks
  /// different (equally valid) solutions.
  explicit CoboundarySolver(const RelativeAtomicComplex& c, bool reverse_pivots = false)
      : c_(c), reverse_(reverse_pivots) {}

  std::optional<SparseVector> solve(const SparseVector& target);
  bool is_coboundary(const SparseVector& target) { return target.empty() || solve(target).has_value(); }

private:
  const RowEchelon& image_from(int degree);

  const RelativeAtomicComplex& c_;
  bool reverse_;
  std::map<int, std::pair<RowEchelon, std::vector<AtomMask>>> cache_;
};

} // namespace hyperarr
