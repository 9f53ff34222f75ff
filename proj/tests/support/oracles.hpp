#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "hyperarr/bicomplex.hpp"
#include "hyperarr/dga.hpp"
#include "hyperarr/hypergraph.hpp"

// Slow, direct reimplementations used to cross-check the library.
namespace oracle {

/// Vertex sets (size >= 2) of the components of the edges whose color is in
/// colors, found by depth-first search on the vertex adjacency.
std::vector<std::vector<int>> components(const hyperarr::EdgeColoredHypergraph& h,
                                         const std::vector<std::size_t>& colors);
int codim(const hyperarr::EdgeColoredHypergraph& h, const std::vector<std::size_t>& colors);

/// sum over color subsets S of (-1)^|S| t^(l - codim S), low-to-high.
std::vector<std::int64_t> whitney_polynomial(const hyperarr::EdgeColoredHypergraph& h);

/// Colorings in [t]^l where every color has a non-monochromatic component.
std::uint64_t proper_colorings(const hyperarr::EdgeColoredHypergraph& h, int t);

/// Points of [-s,s]^l outside the union of the subspaces.
std::uint64_t lattice_points_off(const hyperarr::EdgeColoredHypergraph& h, int s);

/// Lagrange interpolation through (i, values[i]); rational coefficients low-to-high.
std::vector<mpq_class> interpolate(const std::vector<std::int64_t>& values);

std::int64_t evaluate(const std::vector<std::int64_t>& p, std::int64_t t);

/// Dense rational matrices stored as rows.
using Matrix = std::vector<std::vector<mpq_class>>;
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0} for a matrix with cols columns.
std::vector<std::vector<mpq_class>> nullspace(Matrix m, std::size_t cols);

/// rank E_r^{p} at one total degree of a piece, straight from
/// Z_r^p = {x in F^p : D x in F^{p+r}} and
/// E_r^p = Z_r^p / (Z_{r-1}^{p+1} + D Z_{r-1}^{p-r+1}).
std::size_t page_rank(const hyperarr::BiComplexPiece& piece, int total_degree, int column, int r);

/// dim ker D - dim im D at one total degree of a piece.
std::size_t total_homology(const hyperarr::BiComplexPiece& piece, int total_degree);

} // namespace oracle
