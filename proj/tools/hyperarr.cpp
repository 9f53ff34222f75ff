#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hyperarr/errors.hpp"
#include "hyperarr/io.hpp"

using namespace hyperarr;
using nlohmann::json;

namespace {

constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;
constexpr int exit_resource = 3;

struct Budgets {
  std::uint64_t max_colorings = default_enumeration_budget;
  std::uint64_t max_generators = default_max_generators;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_lattice(const std::string& file, const std::string& dot) {
  auto a = load_arrangement(file);
  IntersectionLattice lattice(a.hypergraph);
  if (!dot.empty()) {
    std::ofstream out(dot);
    if (!out) throw InputError("cannot write " + dot);
    out << hasse_dot(lattice);
  }
  emit(lattice_report(lattice));
  return 0;
}

int run_charpoly(const std::string& file, const std::string& method, const Budgets& b) {
  auto a = load_arrangement(file);
  const auto& h = a.hypergraph;
  auto by_mobius = [&] { return characteristic_polynomial(IntersectionLattice(h), h.vertex_count()); };
  auto by_dc = [&] { return chromatic_polynomial(h); };
  auto by_count = [&] { return chromatic_polynomial_by_counting(h, b.max_colorings); };
  if (method == "mobius") emit({{"polynomial", polynomial_to_json(by_mobius())}});
  if (method == "dc") emit({{"polynomial", polynomial_to_json(by_dc())}});
  if (method == "count") emit({{"polynomial", polynomial_to_json(by_count())}});
  if (method == "all") {
    auto m = by_mobius(), d = by_dc(), c = by_count();
    if (m == d && d == c) {
      emit({{"polynomial", polynomial_to_json(m)}});
    } else {
      emit({{"mismatch",
             {{"mobius", polynomial_to_json(m)}, {"dc", polynomial_to_json(d)}, {"count", polynomial_to_json(c)}}}});
      return exit_mismatch;
    }
  }
  return 0;
}

int run_geometric(const std::string& file) {
  auto a = load_arrangement(file);
  emit(geometric_report(IntersectionLattice(a.hypergraph)));
  return 0;
}

int run_cohomology(const std::string& file, std::optional<int> max_degree, const Budgets& b) {
  auto a = load_arrangement(file);
  RelativeAtomicComplex c(a.hypergraph, a.options.order, b.max_generators);
  const int d = max_degree.value_or(a.options.max_degree.value_or(default_max_degree));
  emit(cohomology_report(c, cohomology(c, d), d));
  return 0;
}

int run_pi(const std::string& file, std::optional<int> max_degree, std::optional<int> max_page,
           std::optional<int> max_codim, const Budgets& b) {
  auto a = load_arrangement(file);
  RelativeAtomicComplex c(a.hypergraph, a.options.order, b.max_generators);
  const int t = max_degree.value_or(a.options.max_degree.value_or(8));
  const int r = max_page.value_or(a.options.max_page.value_or(t));
  emit(pi_report(pi_ranks(c, t, r, max_codim)));
  return 0;
}

int run_massey(const std::string& file) {
  auto a = load_arrangement(file);
  emit(massey_report(a.hypergraph, analyze_massey(a.hypergraph)));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of subspace arrangements given by edge colored hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Budgets budgets;
  app.add_option("--max-colorings", budgets.max_colorings, "Budget for brute-force coloring enumeration");
  app.add_option("--max-generators", budgets.max_generators, "Budget for relative atomic complex generators");

  std::string file, dot, method = "all";
  std::optional<int> max_degree, max_page, max_codim;
  int l = 0, k = 0;

  auto* lattice = app.add_subcommand("lattice", "Intersection lattice, Mobius values and covers");
  lattice->add_option("FILE", file)->required();
  lattice->add_option("--dot", dot, "Write the Hasse diagram in DOT format");

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial");
  charpoly->add_option("FILE", file)->required();
  charpoly->add_option("--method", method)->check(CLI::IsMember({"mobius", "dc", "count", "all"}));

  auto* geometric = app.add_subcommand("geometric", "Semimodularity of the lattice");
  geometric->add_option("FILE", file)->required();

  auto* cohom = app.add_subcommand("cohomology", "Betti numbers of the relative atomic complex");
  cohom->add_option("FILE", file)->required();
  cohom->add_option("--max-degree", max_degree);

  auto* pi = app.add_subcommand("pi", "Spectral sequence pages and rational homotopy ranks");
  pi->add_option("FILE", file)->required();
  pi->add_option("--max-degree,--max-total-degree", max_degree);
  pi->add_option("--max-page", max_page);
  pi->add_option("--max-codim", max_codim);

  auto* massey = app.add_subcommand("massey", "Massey color systems and triple products");
  massey->add_option("FILE", file)->required();

  auto* kequal = app.add_subcommand("kequal", "Massey vanishing bound for the k-equal arrangement");
  kequal->add_option("L", l)->required();
  kequal->add_option("K", k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_input;
  }

  try {
    if (*lattice) return run_lattice(file, dot);
    if (*charpoly) return run_charpoly(file, method, budgets);
    if (*geometric) return run_geometric(file);
    if (*cohom) return run_cohomology(file, max_degree, budgets);
    if (*pi) return run_pi(file, max_degree, max_page, max_codim, budgets);
    if (*massey) return run_massey(file);
    if (*kequal) {
      emit(kequal_report(l, k));
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return exit_resource;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return exit_mismatch;
  }
  return 0;
}
