#include <doctest.h>

#include <string>

#include "corpus.hpp"
#include "hyperarr/errors.hpp"
#include "hyperarr/io.hpp"

using namespace hyperarr;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_arrangement(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

bool mentions(const std::string& message, const std::string& part) { return message.find(part) != std::string::npos; }

} // namespace

TEST_CASE("parse ex28") {
  auto a = parse_arrangement(R"({"vertices": 4, "edges": [
    {"vertices": [1, 2], "color": "R"}, {"vertices": [2, 3], "color": "B"}, {"vertices": [3, 4], "color": "R"}]})");
  CHECK(a.hypergraph.vertex_count() == 4);
  CHECK(a.hypergraph.edge_count() == 3);
  CHECK(a.hypergraph.colors() == std::vector<std::string>{"B", "R"});
  CHECK_FALSE(a.options.strict);
  CHECK(a.options.order.empty());
}

TEST_CASE("edgeless input") {
  auto a = parse_arrangement(R"({"vertices": 3, "edges": []})");
  CHECK(a.hypergraph.color_count() == 0);
}

TEST_CASE("options") {
  auto a = parse_arrangement(R"({"vertices": 4, "edges": [{"vertices": [1, 2], "color": "R"}, {"vertices": [3, 4], "color": "B"}],
    "order": ["B", "R"], "strict": true, "max_degree": 9, "max_page": 3})");
  CHECK(a.options.order == std::vector<std::string>{"B", "R"});
  CHECK(a.options.strict);
  CHECK(a.options.max_degree == 9);
  CHECK(a.options.max_page == 3);
}

TEST_CASE("errors name the offending field") {
  CHECK(mentions(error_of(R"({"vertices": 4, "edges": [], "colour": "R"})"), "colour"));
  CHECK(mentions(error_of(R"({"edges": []})"), "vertices"));
  CHECK(mentions(error_of(R"({"vertices": 4, "edges": [{"vertices": [1, 2], "color": "R"}, {"vertices": [1, 9], "color": "R"}]})"),
                 "edges[1]"));
  CHECK(mentions(error_of(R"({"vertices": 4, "edges": [{"vertices": [1, "x"], "color": "R"}]})"), "edges[0].vertices[1]"));
  CHECK(mentions(error_of(R"({"vertices": 4, "edges": [{"vertices": [1, 2]}]})"), "edges[0].color"));
  CHECK(mentions(error_of("{\"vertices\": 4,\n \"edges\": [\n"), "line"));
  CHECK(mentions(error_of(R"({"vertices": 4, "edges": [{"vertices": [1, 2], "color": "R"}], "order": ["R", "B"]})"), "order"));
  CHECK(mentions(error_of(R"({"vertices": 4, "edges": [{"vertices": [1, 2], "color": "R"}], "strict": 1})"), "strict"));
}

TEST_CASE("missing file") {
  try {
    load_arrangement("/nonexistent/arrangement.json");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(mentions(e.what(), "/nonexistent/arrangement.json"));
  }
}

TEST_CASE("round trip") {
  for (const auto& [name, h] : corpus::acceptance_corpus()) {
    CAPTURE(name);
    auto text = arrangement_to_json(h).dump();
    auto back = parse_arrangement(text);
    CHECK(back.hypergraph.colors() == h.colors());
    CHECK(arrangement_to_json(back.hypergraph).dump() == text);
  }
}

TEST_CASE("reports") {
  CHECK(polynomial_to_json(IntegerPolynomial({0, 1, -1, -1, 1})) == nlohmann::json::parse("[0, 1, -1, -1, 1]"));
  auto k = kequal_report(6, 3);
  CHECK(k["no_massey"] == true);
  CHECK(k["top_degree"] == 7);
  RelativeAtomicComplex c(corpus::ex28());
  auto x = SparseVector::from_entries({{1, mpq_class(1, 2)}});
  auto j = cochain_to_json(c, x);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["coefficient"] == "1/2");
  auto h = cohomology_report(c, cohomology(c, 4), 4);
  CHECK(h.dump() == cohomology_report(c, cohomology(c, 4), 4).dump());
}
