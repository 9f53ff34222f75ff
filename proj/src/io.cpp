#include "hyperarr/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hyperarr/errors.hpp"

namespace hyperarr {

using nlohmann::json;

namespace {

std::string line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

void only_fields(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw InputError(where + ": unknown field '" + key + "'");
  }
}

int integer_field(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<int>();
}

json element_json(const IntersectionLattice& lattice, std::size_t i) {
  const auto& e = lattice[i];
  json colors = json::array();
  for (auto c : e.closed_colors.members()) colors.push_back(lattice.color_names()[c]);
  return {{"index", i}, {"codim", e.codim}, {"colors", colors}, {"blocks", e.partition.blocks(false)}};
}

} // namespace

Arrangement parse_arrangement(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at " + line_of(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) throw InputError("top level: expected an object");
  only_fields(doc, "top level", {"vertices", "edges", "order", "strict", "max_degree", "max_page"});
  if (!doc.contains("vertices")) throw InputError("top level: missing field 'vertices'");
  if (!doc.contains("edges")) throw InputError("top level: missing field 'edges'");

  const int l = integer_field(doc["vertices"], "vertices");
  if (!doc["edges"].is_array()) throw InputError("edges: expected an array");
  std::vector<ColoredEdge> edges;
  std::set<std::string> used;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const json& e = doc["edges"][i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_object()) throw InputError(where + ": expected an object");
    only_fields(e, where, {"vertices", "color"});
    if (!e.contains("vertices") || !e["vertices"].is_array())
      throw InputError(where + ".vertices: expected an array");
    if (!e.contains("color") || !e["color"].is_string()) throw InputError(where + ".color: expected a string");
    ColoredEdge edge;
    for (std::size_t j = 0; j < e["vertices"].size(); ++j)
      edge.vertices.push_back(integer_field(e["vertices"][j], where + ".vertices[" + std::to_string(j) + "]"));
    edge.color = e["color"].get<std::string>();
    used.insert(edge.color);
    edges.push_back(std::move(edge));
  }

  Arrangement out;
  if (doc.contains("order")) {
    if (!doc["order"].is_array()) throw InputError("order: expected an array of colors");
    for (const auto& c : doc["order"]) {
      if (!c.is_string()) throw InputError("order: expected an array of colors");
      out.options.order.push_back(c.get<std::string>());
    }
    std::set<std::string> listed(out.options.order.begin(), out.options.order.end());
    if (listed.size() != out.options.order.size()) throw InputError("order: repeated color");
    if (listed != used) throw InputError("order: must list exactly the edge colors");
  }
  if (doc.contains("strict")) {
    if (!doc["strict"].is_boolean()) throw InputError("strict: expected a boolean");
    out.options.strict = doc["strict"].get<bool>();
  }
  if (doc.contains("max_degree")) out.options.max_degree = integer_field(doc["max_degree"], "max_degree");
  if (doc.contains("max_page")) out.options.max_page = integer_field(doc["max_page"], "max_page");

  out.hypergraph = EdgeColoredHypergraph(l, std::move(edges), out.options.order);
  auto problems = validate(out.hypergraph, out.options.strict);
  if (!problems.empty()) {
    std::string msg = problems.front().message;
    if (problems.front().edge) msg = "edges[" + std::to_string(*problems.front().edge) + "]: " + msg;
    throw InputError(msg);
  }
  return out;
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_arrangement(text.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

json arrangement_to_json(const EdgeColoredHypergraph& h) {
  json edges = json::array();
  for (const auto& e : h.colored_edges()) edges.push_back({{"vertices", e.vertices}, {"color", e.color}});
  return {{"vertices", h.vertex_count()}, {"edges", edges}};
}

json polynomial_to_json(const IntegerPolynomial& p) { return p.coefficients(); }

json cochain_to_json(const RelativeAtomicComplex& c, const SparseVector& x) {
  json terms = json::array();
  for (const auto& [m, q] : x.entries())
    terms.push_back({{"generator", c.label(static_cast<AtomMask>(m))}, {"coefficient", q.get_str()}});
  return terms;
}

json lattice_report(const IntersectionLattice& lattice) {
  const auto mu = mobius(lattice);
  json elements = json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    json e = element_json(lattice, i);
    e["mobius"] = mu[i];
    elements.push_back(std::move(e));
  }
  json covers = json::array();
  for (const auto& [lo, hi] : cover_relations(lattice)) covers.push_back({lo, hi});
  return {{"elements", elements},
          {"covers", covers},
          {"characteristic_polynomial", polynomial_to_json(characteristic_polynomial(lattice, lattice.vertex_count()))}};
}

json geometric_report(const IntersectionLattice& lattice) {
  auto v = find_semimodularity_violation(lattice);
  json out = {{"geometric", !v.has_value()}};
  if (v)
    out["witness"] = {{"x", element_json(lattice, v->x)},
                      {"y", element_json(lattice, v->y)},
                      {"meet", element_json(lattice, v->meet)},
                      {"join", element_json(lattice, v->join)}};
  return out;
}

json cohomology_report(const RelativeAtomicComplex& c, const CohomologyReport& h, int max_degree) {
  json betti = json::array();
  for (const auto& [k, b] : h.betti) {
    if (b == 0) continue;
    json reps = json::array();
    for (const auto& z : h.representatives.at(k)) reps.push_back(cochain_to_json(c, z));
    betti.push_back({{"degree", k}, {"rank", b}, {"representatives", reps}});
  }
  json generators = json::array();
  for (int k = c.min_degree(); k <= c.max_degree(); ++k)
    if (auto n = c.generators_in_degree(k).size()) generators.push_back({{"degree", k}, {"count", n}});
  return {{"atoms", c.order()}, {"max_degree", max_degree}, {"generators", generators}, {"betti", betti}};
}

json pi_report(const PiReport& r) {
  json ranks = json::array();
  for (const auto& [k, n] : r.ranks) ranks.push_back({{"degree", k}, {"rank", n}});
  json pages = json::array();
  for (const auto& e : r.pages.entries)
    pages.push_back({{"codim", e.codim},
                     {"column", e.column},
                     {"internal_degree", e.internal_degree},
                     {"total_degree", e.total_degree()},
                     {"ranks", e.rank},
                     {"differential_ranks", e.differential_rank},
                     {"infinity", e.rank_infinity}});
  return {{"max_total_degree", r.max_total_degree},
          {"max_page", r.pages.max_page},
          {"max_codim", r.max_codim},
          {"pi", ranks},
          {"caveats",
           {{"codim_truncated", r.codim_truncated},
            {"degree_one_letters", r.degree_one_letters},
            {"nonpositive_generators_dropped", r.nonpositive_generators_dropped}}},
          {"pages", pages}};
}

json massey_report(const EdgeColoredHypergraph& h, const MasseyReport& r) {
  json systems = json::array();
  json certificate = nullptr;
  for (const auto& m : r.systems) {
    RelativeAtomicComplex c(h, m.d2.order);
    json colors = json::object();
    for (std::size_t i = 0; i < 5; ++i) colors["l" + std::to_string(i + 1)] = m.system.colors[i];
    json entry = {
        {"colors", colors},
        {"no_refining_colors", m.system.no_refining_colors},
        {"d2",
         {{"class", m.d2.label},
          {"cocycle", cochain_to_json(c, m.d2.cocycle)},
          {"degree", m.d2.degree},
          {"closed", m.d2.closed},
          {"nonzero_in_cohomology", m.d2.nonzero_in_cohomology},
          {"survives_to_e2", m.d2.survives_to_e2},
          {"nonzero_on_e2", m.d2.nonzero_on_e2},
          {"e2_sign", m.d2.d2_sign},
          {"zigzag_cohomology_sign", m.d2.d2_cohomology_sign}}},
        {"triple_product",
         {{"defined", m.triple.defined},
          {"representative", cochain_to_json(c, m.triple.representative)},
          {"closed", m.triple.closed},
          {"agrees_with_d2_class", m.agrees_with_d2_class},
          {"independent_of_choices", m.independent_of_choices},
          {"nontrivial", m.nontrivial}}}};
    if (m.nontrivial && certificate.is_null())
      certificate = {{"colors", colors},
                     {"class", m.d2.label},
                     {"degree", m.d2.degree},
                     {"evidence", "triple product not in the ideal generated by [a_l1] and [a_l3]"}};
    systems.push_back(std::move(entry));
  }
  return {{"systems", systems}, {"non_formal", r.non_formal()}, {"certificate", certificate}};
}

json kequal_report(int l, int k) {
  return {{"no_massey", kequal_no_massey(l, k)}, {"top_degree", kequal_top_degree(l, k)}};
}

} // namespace hyperarr
