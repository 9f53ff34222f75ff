#include "hyperarr/massey.hpp"

#include <algorithm>

#include "hyperarr/bicomplex.hpp"
#include "hyperarr/errors.hpp"
#include "hyperarr/spectral.hpp"

namespace hyperarr {

namespace {

ColorSet set_of(const EdgeColoredHypergraph& h, std::initializer_list<std::size_t> colors) {
  ColorSet s = h.no_colors();
  for (auto c : colors) s.insert(c);
  return s;
}

// lambda refines {a,b} while neither a refines {b,lambda} nor b refines {a,lambda}
bool embedded(const EdgeColoredHypergraph& h, std::size_t a, std::size_t b, std::size_t lambda) {
  return refines(h, h.single(lambda), set_of(h, {a, b})) && !refines(h, h.single(a), set_of(h, {b, lambda})) &&
         !refines(h, h.single(b), set_of(h, {a, lambda}));
}

bool no_refining_colors(const EdgeColoredHypergraph& h, const std::array<std::size_t, 5>& l) {
  const ColorSet with4 = set_of(h, {l[0], l[1], l[2], l[3]});
  const ColorSet with5 = set_of(h, {l[0], l[1], l[2], l[4]});
  for (std::size_t g = 0; g < h.color_count(); ++g) {
    if (std::find(l.begin(), l.end(), g) != l.end()) continue;
    if (refines(h, h.single(g), with4) || refines(h, h.single(g), with5)) return false;
  }
  return true;
}

std::array<std::size_t, 5> indices_of(const EdgeColoredHypergraph& h, const MasseyColorSystem& s) {
  std::array<std::size_t, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) out[i] = h.color_index(s.colors[i]);
  return out;
}

SparseVector cochain(AtomMask m, int coefficient = 1) {
  return SparseVector::from_entries({{m, coefficient}});
}

} // namespace

bool is_massey_color_system(const EdgeColoredHypergraph& h, const std::array<std::size_t, 5>& l) {
  for (std::size_t i = 0; i < 5; ++i) {
    if (l[i] >= h.color_count()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (l[i] == l[j]) return false;
  }
  return multiplicative(h, h.single(l[0]), h.single(l[1])) &&
         multiplicative(h, set_of(h, {l[0], l[1]}), h.single(l[2])) && embedded(h, l[0], l[1], l[3]) &&
         embedded(h, l[1], l[2], l[4]);
}

std::vector<MasseyColorSystem> find_massey_color_systems(const EdgeColoredHypergraph& h) {
  std::vector<MasseyColorSystem> out;
  const std::size_t n = h.color_count();
  if (n < 5) return out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a || !multiplicative(h, h.single(a), h.single(b))) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b || !multiplicative(h, set_of(h, {a, b}), h.single(c))) continue;
        for (std::size_t d = 0; d < n; ++d) {
          if (d == a || d == b || d == c || !embedded(h, a, b, d)) continue;
          for (std::size_t e = 0; e < n; ++e) {
            if (e == a || e == b || e == c || e == d || !embedded(h, b, c, e)) continue;
            std::array<std::size_t, 5> l{a, b, c, d, e};
            MasseyColorSystem s;
            for (std::size_t i = 0; i < 5; ++i) s.colors[i] = h.color_name(l[i]);
            s.no_refining_colors = no_refining_colors(h, l);
            out.push_back(std::move(s));
          }
        }
      }
    }
  return out;
}

AtomOrder massey_atom_order(const EdgeColoredHypergraph& h, const MasseyColorSystem& s) {
  AtomOrder order(s.colors.begin(), s.colors.end());
  for (const auto& name : h.colors())
    if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
  return order;
}

MasseyD2Report massey_d2_class(const EdgeColoredHypergraph& h, const MasseyColorSystem& s) {
  if (!is_massey_color_system(h, indices_of(h, s))) throw InputError("not a Massey color system");
  MasseyD2Report r;
  r.order = massey_atom_order(h, s);
  RelativeAtomicComplex c(h, r.order);
  // l1..l5 are bits 0..4
  const AtomMask m1234 = 0b01111, m1235 = 0b10111;
  for (int sign : {1, -1}) {
    r.relative_sign = sign;
    r.cocycle = cochain(m1234) + cochain(m1235, sign);
    r.closed = c.d(r.cocycle).empty();
    if (r.closed) break;
  }
  r.degree = c.degree_of(r.cocycle);
  r.label = c.label(m1234) + (r.relative_sign > 0 ? " + " : " - ") + c.label(m1235);
  CoboundarySolver solver(c);
  r.nonzero_in_cohomology = r.closed && !solver.is_coboundary(r.cocycle);

  WordAlgebra a(c);
  const Word word{0b001, 0b010, 0b100};
  for (auto letter : word)
    if (c.degree(letter) < 1) return r;
  BiComplexPiece piece(a, a.codim(word), a.total_degree(word), false, BiComplexOptions{}.max_words);
  const SparseVector x = piece.coordinates(word);
  const int p = WordAlgebra::column(word);
  auto d2 = zigzag_differential(piece, x, 2);
  r.survives_to_e2 = d2.has_value();
  if (!r.survives_to_e2) return r;
  const SparseVector cls = piece.coordinates(WordCombination{{Word{m1234}, 1}, {Word{m1235}, r.relative_sign}});
  r.nonzero_on_e2 = !zero_in_page(piece, cls, p + 2, 2);
  for (int sign : {1, -1}) {
    SparseVector diff = *d2;
    diff.add_scaled(cls, -sign);
    if (zero_in_page(piece, diff, p + 2, 2)) {
      r.d2_sign = sign;
      break;
    }
  }
  // column 0 holds single letters, i.e. cochains of the complex
  std::vector<SparseVector::Entry> letters;
  for (const auto& [i, q] : d2->entries()) letters.emplace_back(piece.word_of(i).front(), q);
  r.d2_representative = SparseVector::from_entries(std::move(letters));
  for (int sign : {1, -1}) {
    SparseVector diff = r.d2_representative;
    diff.add_scaled(r.cocycle, -sign);
    if (solver.is_coboundary(diff)) {
      r.d2_cohomology_sign = sign;
      break;
    }
  }
  return r;
}

TripleProduct massey_triple_product(const RelativeAtomicComplex& c, const SparseVector& u, const SparseVector& v,
                                    const SparseVector& w, bool reverse_pivots) {
  for (const auto* z : {&u, &v, &w}) {
    c.degree_of(*z);
    if (!c.d(*z).empty()) throw InputError("Massey product arguments must be cocycles");
  }
  TripleProduct t;
  CoboundarySolver solver(c, reverse_pivots);
  SparseVector uv = c.multiply(u, v), vw = c.multiply(v, w);
  uv *= -1;
  vw *= -1;
  auto x = solver.solve(uv);
  auto y = solver.solve(vw);
  if (!x || !y) return t;
  t.defined = true;
  t.x = std::move(*x);
  t.y = std::move(*y);
  const int su = c.degree_of(u) % 2 ? -1 : 1;
  t.representative = c.multiply(u, t.y);
  t.representative.add_scaled(c.multiply(t.x, w), -su);
  t.closed = c.d(t.representative).empty();
  if (!t.closed) throw ConsistencyError("Massey triple product representative is not closed");
  return t;
}

bool in_cohomology_ideal(const RelativeAtomicComplex& c, const SparseVector& z, const std::vector<SparseVector>& gens) {
  if (z.empty()) return true;
  const int k = c.degree_of(z);
  RowEchelon span;
  for (auto m : c.generators_in_degree(k - 1)) span.insert(c.d(SparseVector::unit(m)));
  const auto h = cohomology(c, k);
  for (const auto& g : gens) {
    if (g.empty()) continue;
    auto it = h.representatives.find(k - c.degree_of(g));
    if (it == h.representatives.end()) continue;
    for (const auto& rep : it->second) span.insert(c.multiply(g, rep));
  }
  return span.contains(z);
}

bool MasseyReport::non_formal() const {
  return std::any_of(systems.begin(), systems.end(), [](const MasseyCertificate& m) { return m.nontrivial; });
}

MasseyReport analyze_massey(const EdgeColoredHypergraph& h) {
  MasseyReport report;
  for (auto& s : find_massey_color_systems(h)) {
    MasseyCertificate m;
    m.system = s;
    m.d2 = massey_d2_class(h, s);
    RelativeAtomicComplex c(h, m.d2.order);
    const SparseVector u = cochain(0b001), v = cochain(0b010), w = cochain(0b100);
    m.triple = massey_triple_product(c, u, v, w);
    if (m.triple.defined) {
      const std::vector<SparseVector> ideal{u, w};
      for (int sign : {1, -1}) {
        SparseVector diff = m.triple.representative;
        diff.add_scaled(m.d2.cocycle, -sign);
        if (in_cohomology_ideal(c, diff, ideal)) m.agrees_with_d2_class = true;
      }
      auto again = massey_triple_product(c, u, v, w, true);
      m.independent_of_choices =
          again.defined && in_cohomology_ideal(c, again.representative - m.triple.representative, ideal);
      m.nontrivial = !in_cohomology_ideal(c, m.triple.representative, ideal);
    }
    report.systems.push_back(std::move(m));
  }
  return report;
}

bool kequal_no_massey(int l, int k) {
  if (k < 2 || k > l) throw InputError("k-equal arrangement needs 2 <= k <= l");
  return 6 * k - 9 > l + (l / k) * (k - 2);
}

int kequal_top_degree(int l, int k) {
  if (k < 2 || k > l) throw InputError("k-equal arrangement needs 2 <= k <= l");
  return l - 1 + (l / k) * (k - 2);
}

} // namespace hyperarr
