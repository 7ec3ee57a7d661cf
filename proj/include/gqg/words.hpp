#pragma once

#include <string>
#include <vector>

#include "gqg/weights.hpp"

namespace gqg {

/// Index word over the alphabet {1, .., l}, stored as digit characters so the
/// serialized form is the word itself ("112").
using Word = std::string;

Word word_from_letters(const std::vector<unsigned>& letters);
unsigned word_letter(const Word& w, size_t pos); // 1-based letter value at pos (0-based)

/// theta(w) = sum of alpha_{w_k}.
Weight word_degree(const Word& w, size_t rank);

enum class WordOrder { less, equal, greater };

/// Total order with two unusual conventions: at the first disagreement the
/// SMALLER letter wins ("12" > "21"), and a proper prefix is GREATER than its
/// extensions ("1" > "12", empty > everything).
WordOrder word_compare(const Word& u, const Word& v);

inline bool word_less(const Word& u, const Word& v) { return word_compare(u, v) == WordOrder::less; }
inline bool word_greater(const Word& u, const Word& v) { return word_compare(u, v) == WordOrder::greater; }

/// Strict-weak-order functor for containers keyed by words.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

/// Standard (Lyndon-Shishov) word: length <= 1, or u > wv for every split
/// u = vw with v, w nonempty.
bool is_standard(const Word& u);

/// Shirshov factorization u = u1 u2 of a standard word of length >= 2:
/// u1 is the shortest nonempty proper prefix such that both parts are
/// standard. Postconditions (checked): u1 > u2, and u1 is a common prefix of
/// every standard left factor in a standard split.
std::pair<Word, Word> shirshov_factorize(const Word& u);

/// All standard words u with theta(u) componentwise <= bound, ordered
/// greatest-first under word_compare.
std::vector<Word> enumerate_standard(const Weight& bound);

} // namespace gqg
