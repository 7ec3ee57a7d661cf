#pragma once

#include <map>
#include <unordered_map>

#include "gqg/free_algebra.hpp"
#include "gqg/linalg.hpp"

namespace gqg {

/// Degreewise linear-algebra picture of the Nichols quotient U+ (and its
/// mirror U-): for a degree lambda the Gram matrix of the Drinfeld pairing
/// over all index words of that degree, its rank (= dim U+_lambda), a greedy
/// greatest-word-first pivot basis on each side, and the data needed to write
/// any word class in pivot coordinates.
struct GramBlock {
    Weight degree;
    std::vector<Word> words;                  // all words of the degree, greatest first
    std::vector<Vec> gram;                    // gram[i][j] = pairing(words[i], words[j])
    size_t dim = 0;                           // rank
    std::vector<size_t> epivot_idx;           // independent rows, greedy
    std::vector<size_t> fpivot_idx;           // independent columns, greedy
    std::vector<Word> epivots;                // basis words for U+_lambda
    std::vector<Word> fpivots;                // basis words for U-_{-lambda}
    std::vector<Vec> core_inverse;            // inverse of gram[epivots][fpivots]
    std::map<Word, size_t, WordLess> word_index;
};

class NicholsTable {
  public:
    explicit NicholsTable(const BicharTable& t) : t_(t) {}

    const BicharTable& bichar() const { return t_; }
    const CycField& field() const { return t_.field(); }
    size_t rank() const { return t_.rank(); }

    /// Drinfeld pairing on index words, theta(E_u) against theta(F_v).
    /// Memoized recursion peeling the first letter of the F-word.
    const CycScalar& pairing(const Word& eword, const Word& fword);

    /// Mirror evaluation peeling the first letter of the E-word. Shares no
    /// state with pairing(); kept as the independent route for equivalence
    /// checks.
    CycScalar pairing_left_peel(const Word& eword, const Word& fword) const;

    /// All index words of the given degree, greatest first. Cached.
    const std::vector<Word>& words_of_degree(const Weight& lambda);

    const GramBlock& block(const Weight& lambda);
    size_t dim(const Weight& lambda) { return block(lambda).dim; }
    const std::vector<Word>& basis(const Weight& lambda) { return block(lambda).epivots; }
    const std::vector<Word>& fbasis(const Weight& lambda) { return block(lambda).fpivots; }

    /// Class of a free element of U+ as the vector of pairings against the
    /// degree's F-pivot words. Zero vector iff the class vanishes; faithful
    /// coordinates of the quotient.
    Vec e_class_vector(const FreeElement& x, const Weight& lambda);
    /// Same on the U- side: pairings of E-pivot words against the element.
    Vec f_class_vector(const FreeElement& y, const Weight& lambda);

    /// Coordinates of the class of x over the E-pivot basis.
    Vec e_coordinates(const FreeElement& x, const Weight& lambda);
    /// Coordinates of the class of y over the F-pivot basis.
    Vec f_coordinates(const FreeElement& y, const Weight& lambda);

    /// Cached super-letter expansion.
    const FreeElement& super_letter_cached(const Word& u);

  private:
    BicharTable t_;
    std::unordered_map<std::string, CycScalar> memo_;
    std::map<Weight, std::vector<Word>> words_cache_;
    std::map<Weight, GramBlock> blocks_;
    std::map<Word, FreeElement, WordLess> super_cache_;
};

} // namespace gqg
