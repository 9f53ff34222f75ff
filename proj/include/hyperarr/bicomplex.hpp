#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperarr/dga.hpp"
#include "hyperarr/linalg.hpp"

namespace hyperarr {

/// a_1|a_2|...|a_n, letters are generators of positive degree.
using Word = std::vector<AtomMask>;
using WordCombination = std::map<Word, std::int64_t>;

/// Operations on the span of words over a relative atomic complex.
///
/// Signs use the shifted letter degree |a|-1 (a letter followed by an edge of
/// degree -1): d_W acts on letter i with sign (-1)^(sum_{j<i} (|a_j|-1)),
/// d_mu contracts the edge after letter i with sign (-1)^(1 + sum_{j<=i} (|a_j|-1)),
/// so d_mu(a|b) = (-1)^|a| ab, and shuffles carry the Koszul sign of the
/// shifted degrees.
class WordAlgebra {
public:
  explicit WordAlgebra(const RelativeAtomicComplex& c);

  const RelativeAtomicComplex& complex() const { return c_; }
  /// Generators of degree >= 1, increasing by mask.
  const std::vector<AtomMask>& letters() const { return letters_; }

  int internal_degree(const Word& w) const;
  int total_degree(const Word& w) const { return internal_degree(w) - static_cast<int>(w.size()) + 1; }
  int codim(const Word& w) const;
  static int column(const Word& w) { return 1 - static_cast<int>(w.size()); }

  WordCombination d_W(const Word& w) const;
  WordCombination d_mu(const Word& w) const;
  WordCombination shuffle(const Word& u, const Word& v) const;

  WordCombination d_W(const WordCombination& x) const;
  WordCombination d_mu(const WordCombination& x) const;

  std::string label(const Word& w) const;

  /// Smallest (|a|-1)/codim(a) over letters, as numerator/denominator; zero
  /// when letters of degree 1 exist.
  std::pair<int, int> slope() const;

private:
  int shifted(AtomMask a) const { return c_.degree(a) - 1; }
  const RelativeAtomicComplex& c_;
  std::vector<AtomMask> letters_;
};

void add_to(WordCombination& acc, const WordCombination& x, std::int64_t scale = 1);

/// All words with total degree <= max_total_degree and codim <= max_codim.
std::vector<Word> enumerate_words(const WordAlgebra& a, int max_total_degree, int max_codim);

struct SignCheckReport {
  int max_total_degree = 0;
  int max_codim = 0;
  std::size_t words = 0;
  std::size_t shuffle_pairs = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

/// Checks d_W^2 = 0, d_mu^2 = 0 and d_W d_mu + d_mu d_W = 0 on every word, and
/// that both differentials are derivations of the shuffle product on every
/// pair of words whose shuffle stays in range; the latter shows that they
/// preserve the span of shuffle relations.
SignCheckReport verify_bicomplex_signs(const WordAlgebra& a, int max_total_degree, int max_codim);

/// Largest codim cap <= limit whose word set has at most max_words words.
int sign_check_codim(const WordAlgebra& a, int max_total_degree, int limit = 8, std::size_t max_words = 5000);

/// Same checks with the codim cap from sign_check_codim.
SignCheckReport verify_bicomplex_signs(const WordAlgebra& a, int max_total_degree);

/// Words with a fixed multiset of letters modulo shuffles of nonempty words.
struct ContentQuotient {
  Word content; // sorted
  int weight = 0;
  int internal_degree = 0;
  std::vector<Word> words; // all distinct orderings, sorted
  std::vector<std::size_t> basis; // indices into words
  /// Normal form of each word in coordinates of basis.
  std::vector<SparseVector> normal_form;
  /// Echelon rows of the relation span, as combinations of words.
  std::vector<WordCombination> relations;

  std::size_t word_index(const Word& w) const;
};

ContentQuotient build_content_quotient(const WordAlgebra& a, Word content);

struct BasisElement {
  int total_degree;
  int column;
  std::size_t content; // index into BiComplexPiece::contents
  std::size_t position; // index into that content's basis
};

/// Summand of the total complex spanned by words of one total codimension.
/// Both differentials and the shuffle relations preserve this grading.
class BiComplexPiece {
public:
  /// Throws ResourceError when the piece would hold more than max_words words
  /// and ConsistencyError when a sign identity fails.
  BiComplexPiece(const WordAlgebra& a, int codim, int max_total_degree, bool validate,
                 std::uint64_t max_words);

  int codim() const { return codim_; }
  int max_total_degree() const { return max_total_degree_; }
  /// Ordered by total degree, then column from 0 downwards, then content.
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::vector<ContentQuotient>& contents() const { return contents_; }
  /// [begin, end) of the basis elements in one total degree.
  std::pair<std::size_t, std::size_t> degree_range(int k) const;

  /// D = d_W + d_mu of a basis element, in basis coordinates; only for total
  /// degree <= max_total_degree (the next degree is kept as the target).
  const SparseVector& total_differential(std::size_t i) const;
  bool has_differential(std::size_t i) const { return basis_[i].total_degree <= max_total_degree_; }

  /// Image of a word combination in basis coordinates.
  SparseVector coordinates(const WordCombination& x) const;
  SparseVector coordinates(const Word& w) const { return coordinates(WordCombination{{w, 1}}); }
  /// A word representing a basis element.
  const Word& word_of(std::size_t i) const;

  SparseVector apply(const SparseVector& x) const;
  /// Keeps the coordinates whose column lies in [lo, hi].
  SparseVector restrict_columns(const SparseVector& x, int lo, int hi) const;

private:
  WordCombination total_on_words(const WordCombination& x) const;

  const WordAlgebra& a_;
  int codim_, max_total_degree_;
  std::vector<ContentQuotient> contents_;
  std::map<Word, std::size_t> content_index_;
  std::vector<std::size_t> offset_; // global index of each content's first basis element
  std::vector<BasisElement> basis_;
  std::map<int, std::pair<std::size_t, std::size_t>> ranges_;
  std::vector<SparseVector> differential_;
};

struct BiComplexOptions {
  int max_total_degree = 8;
  /// Pieces with codim above this are omitted; by default every piece that can
  /// reach total degree max_total_degree is built when letters of degree 1 are
  /// absent, and fallback_max_codim is used otherwise.
  std::optional<int> max_codim;
  int fallback_max_codim = 6;
  bool validate = true;
  /// Bound on the number of words (all orderings of all contents) per piece.
  std::uint64_t max_words = 2'000'000;
};

/// The word bicomplex truncated to total degree <= max_total_degree + 1.
class BiComplex {
public:
  BiComplex(const RelativeAtomicComplex& c, BiComplexOptions options = {});

  const WordAlgebra& algebra() const { return *algebra_; }
  int max_total_degree() const { return options_.max_total_degree; }
  int max_codim() const { return max_codim_; }
  /// Pieces above max_codim may still contribute in degrees <= max_total_degree.
  bool codim_truncated() const { return codim_truncated_; }
  const std::map<int, BiComplexPiece>& pieces() const { return pieces_; }
  /// Built on first use, even above max_codim.
  const BiComplexPiece& piece(int codim) const;

private:
  std::unique_ptr<WordAlgebra> algebra_;
  BiComplexOptions options_;
  int max_codim_ = 0;
  bool codim_truncated_ = false;
  mutable std::map<int, BiComplexPiece> pieces_;
};

} // namespace hyperarr
