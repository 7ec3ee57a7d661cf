#pragma once

#include <map>

#include "gqg/nichols.hpp"

namespace gqg {

/// Element of the group-algebra part U0: finitely supported
/// (lambda, mu) -> coefficient of K_lambda L_mu.
class U0Element {
  public:
    using Support = std::map<std::pair<Weight, Weight>, CycScalar>;

    explicit U0Element(const CycField& f) : field_(&f) {}
    static U0Element kl(const CycField& f, const Weight& lambda, const Weight& mu,
                        const CycScalar& c);

    const CycField& field() const { return *field_; }
    const Support& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Weight& lambda, const Weight& mu, const CycScalar& c);
    const CycScalar* coeff(const Weight& lambda, const Weight& mu) const;

    U0Element operator+(const U0Element& o) const;
    U0Element operator-(const U0Element& o) const;
    U0Element scaled(const CycScalar& c) const;
    /// Group-algebra product: K_a L_b * K_c L_d = K_{a+c} L_{b+d}.
    U0Element operator*(const U0Element& o) const;
    bool operator==(const U0Element& o) const { return terms_ == o.terms_; }

  private:
    const CycField* field_;
    Support terms_;
};

/// Key of one normal-form term F_f K_k L_l E_e. In a normalized element the
/// words are pivot words of their degrees; intermediate straightening states
/// hold arbitrary free words.
struct NormalKey {
    Word f;
    Weight k;
    Weight l;
    Word e;
    auto operator<=>(const NormalKey&) const = default;
};

class UContext;

/// Element of U in triangular normal form (F-part, K/L, E-part).
class AlgebraElement {
  public:
    explicit AlgebraElement(const CycField& f) : field_(&f) {}

    const CycField& field() const { return *field_; }
    const std::map<NormalKey, CycScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const NormalKey& key, const CycScalar& c);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const CycScalar& c) const;
    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

  private:
    const CycField* field_;
    std::map<NormalKey, CycScalar> terms_;

    friend class UContext;
};

/// Keeps the Harish-Chandra projection: the U0 part of a normal form.
U0Element sh_project(const AlgebraElement& a);

/// Multiplication context: pivot tables precomputed for every balanced degree
/// up to table_bound. Products whose straightening leaves the tables throw.
class UContext {
  public:
    UContext(NicholsTable& nt, const Weight& table_bound);

    NicholsTable& nichols() const { return *nt_; }
    const BicharTable& bichar() const { return nt_->bichar(); }
    const CycField& field() const { return nt_->field(); }
    size_t rank() const { return nt_->rank(); }
    const Weight& table_bound() const { return bound_; }

    AlgebraElement one() const;
    AlgebraElement kl(const Weight& lambda, const Weight& mu) const;
    AlgebraElement e_generator(unsigned i) const; // 1-based
    AlgebraElement f_generator(unsigned i) const;
    AlgebraElement from_u0(const U0Element& u) const;
    /// Normal-form element with the given free words (reduced to pivots).
    AlgebraElement monomial(const Word& fword, const Weight& k, const Weight& l,
                            const Word& eword) const;

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

  private:
    NicholsTable* nt_;
    Weight bound_;
    mutable std::map<std::pair<Word, unsigned>, std::map<NormalKey, CycScalar>> ef_cache_;

    using Raw = std::map<NormalKey, CycScalar>;
    static void raw_add(Raw& raw, const NormalKey& key, const CycScalar& c);
    const Raw& ef_expand(const Word& eword, unsigned i) const;
    Raw mul_f(const Raw& in, unsigned i) const;
    Raw mul_k(const Raw& in, const Weight& nu) const;
    Raw mul_l(const Raw& in, const Weight& nu) const;
    static Raw mul_e(const Raw& in, unsigned i);
    AlgebraElement normalize(const Raw& raw) const;
    void check_degree(const Weight& d) const;
};

} // namespace gqg
