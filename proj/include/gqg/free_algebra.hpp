#pragma once

#include <map>

#include "gqg/words.hpp"

namespace gqg {

/// Element of the free algebra K<x_1..x_l>: finitely supported word -> scalar
/// map. Zero coefficients are never stored.
class FreeElement {
  public:
    explicit FreeElement(const CycField& f) : field_(&f) {}
    static FreeElement monomial(const CycField& f, const Word& w, const CycScalar& c);
    static FreeElement generator(const CycField& f, unsigned letter);

    const CycField& field() const { return *field_; }
    const std::map<Word, CycScalar, WordLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Word& w, const CycScalar& c);
    const CycScalar* coeff(const Word& w) const;

    FreeElement operator+(const FreeElement& o) const;
    FreeElement operator-(const FreeElement& o) const;
    FreeElement operator*(const FreeElement& o) const;
    FreeElement scaled(const CycScalar& c) const;

    bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }

    /// Greatest word of the support under word_compare; throws when zero.
    const Word& leading_word() const;
    /// Degree when homogeneous; throws otherwise.
    Weight homogeneous_degree(size_t rank) const;

  private:
    const CycField* field_;
    std::map<Word, CycScalar, WordLess> terms_;
};

/// Iterated chi-twisted bracketing of a standard word:
/// [u] = u for length <= 1, else [u1][u2] - chi(theta(u2), theta(u1))^{-1} [u2][u1]
/// along the Shirshov factorization u = u1 u2.
FreeElement super_letter(const Word& u, const BicharTable& t);

} // namespace gqg
