#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyperarr/dga.hpp"
#include "hyperarr/hypergraph.hpp"
#include "hyperarr/linalg.hpp"

namespace hyperarr {

/// Colors lambda_1..lambda_5: the triple and its two embedded colors.
struct MasseyColorSystem {
  std::array<std::string, 5> colors;
  /// No color outside the system refines {l1,l2,l3,l4} or {l1,l2,l3,l5}.
  bool no_refining_colors = false;

  friend bool operator==(const MasseyColorSystem&, const MasseyColorSystem&) = default;
};

/// The multiplicativity and embedding conditions for distinct colors l1..l5.
bool is_massey_color_system(const EdgeColoredHypergraph& h, const std::array<std::size_t, 5>& colors);

/// Every tuple (l1,...,l5) of distinct colors that passes is_massey_color_system.
std::vector<MasseyColorSystem> find_massey_color_systems(const EdgeColoredHypergraph& h);

/// l1..l5 first, then the remaining colors in canonical order.
AtomOrder massey_atom_order(const EdgeColoredHypergraph& h, const MasseyColorSystem& s);

struct MasseyD2Report {
  AtomOrder order;
  int degree = 0;
  /// a{l1,l2,l3,l4} + s a{l1,l2,l3,l5} in the complex built with order, with
  /// s = relative_sign chosen so that the sum is closed when possible.
  SparseVector cocycle;
  int relative_sign = 1;
  std::string label;
  bool closed = false;
  bool nonzero_in_cohomology = false;
  /// d_1(a_l1|a_l2|a_l3) = 0, so the word lives on E_2.
  bool survives_to_e2 = false;
  bool nonzero_on_e2 = false;
  /// d_2 of the word equals sign * class on E_2; 0 when neither matches.
  int d2_sign = 0;
  /// Column 0 part of the zig-zag for d_2, as a cochain.
  SparseVector d2_representative;
  /// That cochain is cohomologous to sign * class; 0 when neither.
  int d2_cohomology_sign = 0;
  bool d2_matches() const { return survives_to_e2 && d2_sign != 0; }
};

/// Throws InputError if s fails is_massey_color_system.
MasseyD2Report massey_d2_class(const EdgeColoredHypergraph& h, const MasseyColorSystem& s);

struct TripleProduct {
  /// [u][v] = 0 and [v][w] = 0.
  bool defined = false;
  SparseVector x, y;
  /// u y - (-1)^|u| x w where d x = -u v and d y = -v w.
  SparseVector representative;
  bool closed = false;
};

/// Throws InputError unless u, v, w are nonzero homogeneous cocycles.
TripleProduct massey_triple_product(const RelativeAtomicComplex& c, const SparseVector& u, const SparseVector& v,
                                    const SparseVector& w, bool reverse_pivots = false);

/// Whether the homogeneous cochain z lies in the ideal of H generated by the
/// classes of gens, plus coboundaries.
bool in_cohomology_ideal(const RelativeAtomicComplex& c, const SparseVector& z, const std::vector<SparseVector>& gens);

struct MasseyCertificate {
  MasseyColorSystem system;
  MasseyD2Report d2;
  TripleProduct triple;
  /// The triple product differs from +-cocycle by an element of ([u],[w]).
  bool agrees_with_d2_class = false;
  /// Same class modulo the ideal after re-solving with reversed pivots.
  bool independent_of_choices = false;
  /// The triple product is not in the ideal ([u],[w]): a non-trivial Massey product.
  bool nontrivial = false;
};

struct MasseyReport {
  std::vector<MasseyCertificate> systems;
  bool non_formal() const;
};

MasseyReport analyze_massey(const EdgeColoredHypergraph& h);

/// 6k-9 > l + floor(l/k)(k-2); InputError unless 2 <= k <= l.
bool kequal_no_massey(int l, int k);
/// l-1 + floor(l/k)(k-2), above which the cohomology of the k-equal arrangement vanishes.
int kequal_top_degree(int l, int k);

} // namespace hyperarr
