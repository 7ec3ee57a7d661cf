#include "gqg/free_algebra.hpp"

namespace gqg {

FreeElement FreeElement::monomial(const CycField& f, const Word& w, const CycScalar& c) {
    FreeElement e(f);
    e.add_term(w, c);
    return e;
}

FreeElement FreeElement::generator(const CycField& f, unsigned letter) {
    return monomial(f, word_from_letters({letter}), CycScalar::one(f));
}

void FreeElement::add_term(const Word& w, const CycScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const CycScalar* FreeElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? nullptr : &it->second;
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
    FreeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
    FreeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

FreeElement FreeElement::operator*(const FreeElement& o) const {
    FreeElement r(*field_);
    for (const auto& [u, a] : terms_)
        for (const auto& [v, b] : o.terms_) r.add_term(u + v, a * b);
    return r;
}

FreeElement FreeElement::scaled(const CycScalar& c) const {
    FreeElement r(*field_);
    if (c.is_zero()) return r;
    for (const auto& [w, a] : terms_) r.add_term(w, a * c);
    return r;
}

const Word& FreeElement::leading_word() const {
    if (terms_.empty()) throw Error("leading word of zero element");
    return terms_.rbegin()->first; // map is ordered ascending under word_less
}

Weight FreeElement::homogeneous_degree(size_t rank) const {
    if (terms_.empty()) throw Error("degree of zero element");
    Weight d = word_degree(terms_.begin()->first, rank);
    for (const auto& [w, c] : terms_)
        if (word_degree(w, rank) != d) throw Error("element is not homogeneous");
    return d;
}

FreeElement super_letter(const Word& u, const BicharTable& t) {
    if (!is_standard(u)) throw Error("super_letter: word is not standard: " + u);
    const CycField& f = t.field();
    if (u.size() <= 1) return FreeElement::monomial(f, u, CycScalar::one(f));
    auto [head, tail] = shirshov_factorize(u);
    FreeElement a = super_letter(head, t);
    FreeElement b = super_letter(tail, t);
    CycScalar twist = t.chi(word_degree(tail, t.rank()), word_degree(head, t.rank())).inverse();
    return a * b - (b * a).scaled(twist);
}

} // namespace gqg
