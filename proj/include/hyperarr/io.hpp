#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hyperarr/chromatic.hpp"
#include "hyperarr/dga.hpp"
#include "hyperarr/hypergraph.hpp"
#include "hyperarr/lattice.hpp"
#include "hyperarr/massey.hpp"
#include "hyperarr/spectral.hpp"

namespace hyperarr {

struct ArrangementOptions {
  /// Color order; also the atom order of the relative atomic complex.
  std::vector<std::string> order;
  bool strict = false;
  std::optional<int> max_degree;
  std::optional<int> max_page;
};

struct Arrangement {
  EdgeColoredHypergraph hypergraph;
  ArrangementOptions options;
};

/// {"vertices": l, "edges": [{"vertices": [...], "color": "..."}], ...}.
/// Throws InputError naming the offending field, edge or line.
Arrangement parse_arrangement(std::string_view text);
Arrangement load_arrangement(const std::string& path);

nlohmann::json arrangement_to_json(const EdgeColoredHypergraph& h);

nlohmann::json polynomial_to_json(const IntegerPolynomial& p);
/// Terms {"generator": label, "coefficient": "p/q"} in mask order.
nlohmann::json cochain_to_json(const RelativeAtomicComplex& c, const SparseVector& x);

nlohmann::json lattice_report(const IntersectionLattice& lattice);
nlohmann::json geometric_report(const IntersectionLattice& lattice);
nlohmann::json cohomology_report(const RelativeAtomicComplex& c, const CohomologyReport& h, int max_degree);
nlohmann::json pi_report(const PiReport& r);
nlohmann::json massey_report(const EdgeColoredHypergraph& h, const MasseyReport& r);
nlohmann::json kequal_report(int l, int k);

} // namespace hyperarr
