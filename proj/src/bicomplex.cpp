#include "hyperarr/bicomplex.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "hyperarr/errors.hpp"

namespace hyperarr {

WordAlgebra::WordAlgebra(const RelativeAtomicComplex& c) : c_(c) {
  for (AtomMask m = 1; m < c.generator_count(); ++m)
    if (c.degree(m) >= 1) letters_.push_back(m);
}

int WordAlgebra::internal_degree(const Word& w) const {
  int d = 0;
  for (auto a : w) d += c_.degree(a);
  return d;
}

int WordAlgebra::codim(const Word& w) const {
  int d = 0;
  for (auto a : w) d += c_.codim(a);
  return d;
}

void add_to(WordCombination& acc, const WordCombination& x, std::int64_t scale) {
  for (const auto& [w, c] : x) {
    auto [it, inserted] = acc.emplace(w, c * scale);
    if (!inserted) {
      it->second += c * scale;
      if (it->second == 0) acc.erase(it);
    }
  }
}

namespace {

void add_term(WordCombination& acc, Word w, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = acc.emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

} // namespace

WordCombination WordAlgebra::d_W(const Word& w) const {
  WordCombination out;
  int before = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int sign = before % 2 ? -1 : 1;
    for (auto [t, s] : c_.differential(w[i])) {
      Word x = w;
      x[i] = t;
      add_term(out, std::move(x), sign * s);
    }
    before += shifted(w[i]);
  }
  return out;
}

WordCombination WordAlgebra::d_mu(const Word& w) const {
  WordCombination out;
  int upto = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    upto += shifted(w[i]);
    int s = c_.product_sign(w[i], w[i + 1]);
    if (!s) continue;
    Word x;
    x.reserve(w.size() - 1);
    x.insert(x.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    x.push_back(w[i] | w[i + 1]);
    x.insert(x.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
    add_term(out, std::move(x), ((1 + upto) % 2 ? -1 : 1) * s);
  }
  return out;
}

WordCombination WordAlgebra::shuffle(const Word& u, const Word& v) const {
  WordCombination out;
  Word cur;
  cur.reserve(u.size() + v.size());
  // sign accumulates (-1)^(shifted(b) * shifted(rest of u)) whenever b from v jumps ahead
  std::vector<int> suffix(u.size() + 1, 0);
  for (std::size_t i = u.size(); i-- > 0;) suffix[i] = suffix[i + 1] + shifted(u[i]);
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t j, int sign) {
    if (i == u.size() && j == v.size()) {
      add_term(out, cur, sign);
      return;
    }
    if (i < u.size()) {
      cur.push_back(u[i]);
      rec(i + 1, j, sign);
      cur.pop_back();
    }
    if (j < v.size()) {
      cur.push_back(v[j]);
      rec(i, j + 1, (shifted(v[j]) * suffix[i]) % 2 ? -sign : sign);
      cur.pop_back();
    }
  };
  rec(0, 0, 1);
  return out;
}

WordCombination WordAlgebra::d_W(const WordCombination& x) const {
  WordCombination out;
  for (const auto& [w, c] : x) add_to(out, d_W(w), c);
  return out;
}

WordCombination WordAlgebra::d_mu(const WordCombination& x) const {
  WordCombination out;
  for (const auto& [w, c] : x) add_to(out, d_mu(w), c);
  return out;
}

std::string WordAlgebra::label(const Word& w) const {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "|" : "") + c_.label(w[i]);
  return s;
}

std::pair<int, int> WordAlgebra::slope() const {
  std::pair<int, int> best{0, 1};
  bool first = true;
  for (auto a : letters_) {
    std::pair<int, int> r{c_.degree(a) - 1, c_.codim(a)};
    if (first || r.first * best.second < best.first * r.second) best = r;
    first = false;
  }
  return best;
}

std::vector<Word> enumerate_words(const WordAlgebra& a, int max_total_degree, int max_codim) {
  std::vector<Word> out;
  Word cur;
  const auto& c = a.complex();
  std::function<void(int, int)> rec = [&](int excess, int codim) {
    for (auto l : a.letters()) {
      int e = excess + c.degree(l) - 1, k = codim + c.codim(l);
      if (1 + e > max_total_degree || k > max_codim) continue;
      cur.push_back(l);
      out.push_back(cur);
      rec(e, k);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

namespace {

std::string describe(const WordAlgebra& a, const std::string& what, const Word& w) {
  return what + " fails on " + a.label(w);
}

void record(SignCheckReport& r, bool ok, const std::function<std::string()>& msg) {
  if (ok) return;
  if (r.failures++ == 0) r.first_failure = msg();
}

} // namespace

SignCheckReport verify_bicomplex_signs(const WordAlgebra& a, int max_total_degree, int max_codim) {
  SignCheckReport report;
  report.max_total_degree = max_total_degree;
  report.max_codim = max_codim;
  auto words = enumerate_words(a, max_total_degree, max_codim);
  report.words = words.size();
  for (const auto& w : words) {
    auto dw = a.d_W(w);
    auto dm = a.d_mu(w);
    record(report, a.d_W(dw).empty(), [&] { return describe(a, "d_W^2 = 0", w); });
    record(report, a.d_mu(dm).empty(), [&] { return describe(a, "d_mu^2 = 0", w); });
    auto anti = a.d_W(dm);
    add_to(anti, a.d_mu(dw));
    record(report, anti.empty(), [&] { return describe(a, "d_W d_mu + d_mu d_W = 0", w); });
  }
  // bucket by (total degree, codim) so only pairs whose shuffle stays in range are visited
  std::map<std::pair<int, int>, std::vector<const Word*>> buckets;
  for (const auto& w : words) buckets[{a.total_degree(w), a.codim(w)}].push_back(&w);
  auto shifted_total = [&](const Word& w) { return a.internal_degree(w) - static_cast<int>(w.size()); };
  for (const auto& [ku, us] : buckets)
    for (const auto& [kv, vs] : buckets) {
      if (ku.first + kv.first - 1 > max_total_degree || ku.second + kv.second > max_codim) continue;
      for (const Word* u : us)
        for (const Word* v : vs) {
          ++report.shuffle_pairs;
          const int sign = shifted_total(*u) % 2 ? -1 : 1;
          auto sh = a.shuffle(*u, *v);
          for (int which = 0; which < 2; ++which) {
            auto d = [&](const auto& x) { return which == 0 ? a.d_W(x) : a.d_mu(x); };
            WordCombination lhs = d(sh);
            WordCombination rhs;
            for (const auto& [w, c] : d(*u)) add_to(rhs, a.shuffle(w, *v), c);
            for (const auto& [w, c] : d(*v)) add_to(rhs, a.shuffle(*u, w), sign * c);
            add_to(lhs, rhs, -1);
            record(report, lhs.empty(), [&] {
              return std::string(which == 0 ? "d_W" : "d_mu") + " is not a shuffle derivation on " + a.label(*u) +
                     " , " + a.label(*v);
            });
          }
        }
    }
  return report;
}

int sign_check_codim(const WordAlgebra& a, int max_total_degree, int limit, std::size_t max_words) {
  int best = 0;
  for (int c = 1; c <= limit; ++c) {
    if (enumerate_words(a, max_total_degree, c).size() > max_words) break;
    best = c;
  }
  return best;
}

SignCheckReport verify_bicomplex_signs(const WordAlgebra& a, int max_total_degree) {
  return verify_bicomplex_signs(a, max_total_degree, sign_check_codim(a, max_total_degree));
}

std::size_t ContentQuotient::word_index(const Word& w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w) throw ConsistencyError("word does not belong to this content");
  return static_cast<std::size_t>(it - words.begin());
}

namespace {

std::vector<Word> orderings(Word sorted) {
  std::vector<Word> out;
  do out.push_back(sorted);
  while (std::next_permutation(sorted.begin(), sorted.end()));
  return out;
}

WordCombination integral_row(const SparseVector& row, const std::vector<Word>& words) {
  mpz_class l = 1;
  for (const auto& [i, c] : row.entries()) l = lcm(l, mpz_class(c.get_den()));
  WordCombination out;
  for (const auto& [i, c] : row.entries()) {
    mpq_class v = c * l;
    out[words[i]] = v.get_num().get_si();
  }
  return out;
}

} // namespace

ContentQuotient build_content_quotient(const WordAlgebra& a, Word content) {
  ContentQuotient q;
  std::sort(content.begin(), content.end());
  q.content = content;
  q.weight = static_cast<int>(content.size());
  q.internal_degree = a.internal_degree(content);
  q.words = orderings(content);

  RowEchelon rel;
  if (content.size() >= 2) {
    // distinct letters with multiplicities; each split takes a sub-multiset for the left factor
    std::vector<AtomMask> letter;
    std::vector<int> mult;
    for (auto l : content) {
      if (!letter.empty() && letter.back() == l)
        ++mult.back();
      else {
        letter.push_back(l);
        mult.push_back(1);
      }
    }
    std::vector<int> take(letter.size(), 0);
    while (true) {
      std::size_t i = 0;
      while (i < take.size() && take[i] == mult[i]) take[i++] = 0;
      if (i == take.size()) break;
      ++take[i];
      int left = std::accumulate(take.begin(), take.end(), 0);
      if (left == 0 || left == q.weight) continue;
      std::vector<int> rest(mult.size());
      for (std::size_t k = 0; k < mult.size(); ++k) rest[k] = mult[k] - take[k];
      if (rest < take) continue; // u shuffle v and v shuffle u agree up to sign
      Word left_sorted, right_sorted;
      for (std::size_t k = 0; k < letter.size(); ++k) {
        left_sorted.insert(left_sorted.end(), static_cast<std::size_t>(take[k]), letter[k]);
        right_sorted.insert(right_sorted.end(), static_cast<std::size_t>(rest[k]), letter[k]);
      }
      auto us = orderings(left_sorted), vs = orderings(right_sorted);
      for (const auto& u : us)
        for (const auto& v : vs) {
          std::vector<SparseVector::Entry> entries;
          for (const auto& [w, c] : a.shuffle(u, v)) entries.emplace_back(q.word_index(w), c);
          rel.insert(SparseVector::from_entries(std::move(entries)));
          if (rel.rank() == q.words.size()) break;
        }
    }
  }
  std::vector<std::size_t> position(q.words.size(), 0);
  auto pivots = rel.pivots();
  std::vector<bool> is_pivot(q.words.size(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t i = 0; i < q.words.size(); ++i)
    if (!is_pivot[i]) {
      position[i] = q.basis.size();
      q.basis.push_back(i);
    }
  for (std::size_t i = 0; i < q.words.size(); ++i) {
    std::vector<SparseVector::Entry> entries;
    SparseVector nf = rel.reduce(SparseVector::unit(i));
    for (const auto& [j, c] : nf.entries()) entries.emplace_back(position[j], c);
    q.normal_form.push_back(SparseVector::from_entries(std::move(entries)));
  }
  for (auto p : pivots) q.relations.push_back(integral_row(rel.row(p), q.words));
  return q;
}

BiComplexPiece::BiComplexPiece(const WordAlgebra& a, int codim, int max_total_degree, bool validate,
                               std::uint64_t max_words)
    : a_(a), codim_(codim), max_total_degree_(max_total_degree) {
  const auto& c = a.complex();
  const auto& letters = a.letters();
  // contents: multisets of letters with codim exactly `codim` and total degree <= max + 1
  std::vector<Word> found;
  std::uint64_t words = 0;
  Word cur;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t from, int excess, int k) {
    if (k == codim && !cur.empty()) {
      // number of distinct orderings
      std::uint64_t n = 1, run = 0;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        run = (i > 0 && cur[i] == cur[i - 1]) ? run + 1 : 1;
        n = n * (i + 1) / run;
      }
      words += n;
      if (words > max_words) throw ResourceError("word bicomplex piece of codim " + std::to_string(codim), max_words);
      found.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < letters.size(); ++i) {
      int e = excess + c.degree(letters[i]) - 1, kk = k + c.codim(letters[i]);
      if (1 + e > max_total_degree + 1 || kk > codim) continue;
      cur.push_back(letters[i]);
      rec(i, e, kk);
      cur.pop_back();
    }
  };
  rec(0, 0, 0);

  for (auto& w : found) {
    content_index_[w] = contents_.size();
    contents_.push_back(build_content_quotient(a, w));
  }
  // order contents by (total degree, column descending, content)
  std::vector<std::size_t> order(contents_.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t i) {
    const auto& q = contents_[i];
    return std::make_tuple(q.internal_degree - q.weight + 1, q.weight, q.content);
  };
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
  offset_.assign(contents_.size(), 0);
  for (auto i : order) {
    const auto& q = contents_[i];
    offset_[i] = basis_.size();
    int k = q.internal_degree - q.weight + 1;
    for (std::size_t p = 0; p < q.basis.size(); ++p) basis_.push_back({k, 1 - q.weight, i, p});
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto [it, inserted] = ranges_.emplace(basis_[i].total_degree, std::make_pair(i, i + 1));
    if (!inserted) it->second.second = i + 1;
  }
  differential_.resize(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (has_differential(i)) differential_[i] = coordinates(total_on_words({{word_of(i), 1}}));

  if (!validate) return;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (has_differential(i) && basis_[i].total_degree < max_total_degree_ && !apply(differential_[i]).empty())
      throw ConsistencyError("D^2 != 0 on " + a.label(word_of(i)));
  for (const auto& q : contents_) {
    if (q.internal_degree - q.weight + 1 > max_total_degree_) continue;
    for (const auto& r : q.relations)
      if (!coordinates(total_on_words(r)).empty())
        throw ConsistencyError("differential does not preserve shuffle relations in content " + a.label(q.content));
    for (const auto& w : q.words) {
      auto dw = a.d_W(w), dm = a.d_mu(w);
      auto anti = a.d_W(dm);
      add_to(anti, a.d_mu(dw));
      if (!a.d_W(dw).empty() || !a.d_mu(dm).empty() || !anti.empty())
        throw ConsistencyError("bicomplex sign identity fails on " + a.label(w));
    }
  }
}

std::pair<std::size_t, std::size_t> BiComplexPiece::degree_range(int k) const {
  auto it = ranges_.find(k);
  if (it == ranges_.end()) {
    auto lb = ranges_.lower_bound(k);
    std::size_t at = lb == ranges_.end() ? basis_.size() : lb->second.first;
    return {at, at};
  }
  return it->second;
}

const SparseVector& BiComplexPiece::total_differential(std::size_t i) const {
  if (!has_differential(i)) throw InputError("differential beyond the truncation degree");
  return differential_[i];
}

WordCombination BiComplexPiece::total_on_words(const WordCombination& x) const {
  WordCombination out = a_.d_W(x);
  add_to(out, a_.d_mu(x));
  return out;
}

SparseVector BiComplexPiece::coordinates(const WordCombination& x) const {
  std::vector<SparseVector::Entry> entries;
  for (const auto& [w, c] : x) {
    Word content = w;
    std::sort(content.begin(), content.end());
    auto it = content_index_.find(content);
    if (it == content_index_.end()) throw ConsistencyError("word " + a_.label(w) + " lies outside this piece");
    const auto& q = contents_[it->second];
    for (const auto& [p, v] : q.normal_form[q.word_index(w)].entries())
      entries.emplace_back(offset_[it->second] + p, v * c);
  }
  return SparseVector::from_entries(std::move(entries));
}

const Word& BiComplexPiece::word_of(std::size_t i) const {
  const auto& q = contents_[basis_[i].content];
  return q.words[q.basis[basis_[i].position]];
}

SparseVector BiComplexPiece::apply(const SparseVector& x) const {
  SparseVector out;
  for (const auto& [i, c] : x.entries()) out.add_scaled(total_differential(i), c);
  return out;
}

SparseVector BiComplexPiece::restrict_columns(const SparseVector& x, int lo, int hi) const {
  std::vector<SparseVector::Entry> entries;
  for (const auto& [i, c] : x.entries())
    if (basis_[i].column >= lo && basis_[i].column <= hi) entries.emplace_back(i, c);
  return SparseVector::from_entries(std::move(entries));
}

BiComplex::BiComplex(const RelativeAtomicComplex& c, BiComplexOptions options)
    : algebra_(std::make_unique<WordAlgebra>(c)), options_(options) {
  const int t = options_.max_total_degree;
  auto [num, den] = algebra_->slope();
  std::optional<int> needed;
  if (algebra_->letters().empty())
    needed = 0;
  else if (num > 0)
    needed = std::max(0, (t - 1) * den / num);
  max_codim_ = options_.max_codim ? *options_.max_codim : needed.value_or(options_.fallback_max_codim);
  codim_truncated_ = !needed || max_codim_ < *needed;
  for (int k = 1; k <= max_codim_; ++k) piece(k);
}

const BiComplexPiece& BiComplex::piece(int codim) const {
  auto it = pieces_.find(codim);
  if (it != pieces_.end()) return it->second;
  return pieces_
      .emplace(std::piecewise_construct, std::forward_as_tuple(codim),
               std::forward_as_tuple(*algebra_, codim, options_.max_total_degree, options_.validate,
                                     options_.max_words))
      .first->second;
}

} // namespace hyperarr
