#pragma once

#include <optional>

#include "gqg/nichols.hpp"
#include "gqg/qcombinatorics.hpp"

namespace gqg {

/// One positive root with its PBW data. height == 0 encodes an unbounded
/// (infinite-height) generator, matching char_order's convention.
struct RootDatum {
    Weight root;
    unsigned multiplicity = 0;
    unsigned height = 0;
    std::vector<Word> hard_words;
};

struct RootSystem {
    std::vector<RootDatum> roots; // graded order
    Weight bound;
    bool complete_below_bound = false;

    const RootDatum* find(const Weight& beta) const;
    /// True when chi(beta, beta) != 1 for every root (hypothesis of the
    /// Harish-Chandra isomorphism). Violating roots are returned.
    std::vector<Weight> roots_with_trivial_self_pairing(const BicharTable& t) const;
};

/// Hard-super-letter sieve: walks standard words by increasing degree and
/// keeps those whose image in U+ is not spanned by same-degree PBW monomials
/// in previously found hard letters with smaller maximal letter. Degrees of
/// hard words are the positive roots; heights come from char_order of the
/// self-pairing. Throws ConsistencyError if a complete finite system has a
/// multiplicity other than one.
RootSystem sieve_roots(NicholsTable& nt, const Weight& bound);

/// PBW counting check: for every degree <= bound, the number of height-capped
/// exponent assignments over the roots must equal dim U+. Returns the first
/// failing degree, or nullopt when all degrees agree.
std::optional<Weight> hilbert_cross_check(NicholsTable& nt, const RootSystem& rs, const Weight& bound);

/// Re-verifies every hardness/softness verdict against the final hard-letter
/// set; the sieve's answer must not depend on the discovery schedule.
bool sieve_is_order_independent(NicholsTable& nt, const RootSystem& rs);

} // namespace gqg
