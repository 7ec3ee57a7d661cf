#pragma once

#include "gqg/algebra.hpp"

namespace gqg {

/// Weight multiplicities of one simple highest-weight module.
struct CharacterTable {
    Weight lambda;
    Weight mu;
    std::map<Weight, unsigned> mult; // nonzero entries only; mult[0] = 1
    bool complete = false;           // outer shell of the depth box is all zero
    Weight depth_bound;
    unsigned long total_dim = 0;

    unsigned multiplicity(const Weight& nu) const;
    Weight support_max() const; // componentwise max over the support
};

/// The simple module L(Lambda) built degree by degree: each weight space is
/// presented by the symbols F_i * (basis of the previous space), the zero
/// vectors being exactly those killed by every E_j. Stores the E and F action
/// matrices on the chosen bases, which makes evaluation of matrix elements
/// cheap.
class SimpleModule {
  public:
    SimpleModule(const BicharTable& t, const OmegaTable& w, const Weight& lambda, const Weight& mu,
                 const Weight& depth);

    const CycField& field() const { return t_->field(); }
    size_t rank() const { return t_->rank(); }
    const Weight& depth() const { return depth_; }
    const Weight& highest_lambda() const { return lambda_; }
    const Weight& highest_mu() const { return mu_; }

    unsigned dim(const Weight& nu) const;
    /// E_j moves degree nu to nu - alpha_j.
    Vec apply_e(unsigned j, const Weight& nu, const Vec& v) const;
    /// F_i moves degree nu to nu + alpha_i.
    Vec apply_f(unsigned i, const Weight& nu, const Vec& v) const;

    /// <v | E_x F_y v>, the Harish-Chandra matrix element evaluated through
    /// the module action. Equals Lambda(Sh(E_x F_y)).
    CycScalar sh_functional(const Word& eword, const Word& fword) const;

    CharacterTable character_table() const;

  private:
    struct Block {
        unsigned dim = 0;
        // emat[j][k]: E_{j+1} applied to basis vector k, in the lower basis
        std::vector<std::vector<Vec>> emat;
        // fmat[i][k]: F_{i+1} applied to basis vector k of the lower degree
        std::vector<std::vector<Vec>> fmat;
    };

    const BicharTable* t_;
    const OmegaTable* w_;
    Weight lambda_, mu_, depth_;
    std::map<Weight, Block> blocks_;

    CycScalar hw_k(unsigned i) const; // Lambda(K_{alpha_i})
    CycScalar hw_l(unsigned i) const; // Lambda(L_{alpha_i})
    void build();
};

/// Contravariant Gram matrix at degree nu: entries Lambda(Sh(E_wa F_wb)) over
/// the pivot words of the degree, computed by straightening. Its rank is the
/// weight multiplicity of the simple module.
std::vector<Vec> contravariant_matrix(const UContext& ctx, const OmegaTable& w, const Weight& lambda,
                                      const Weight& mu, const Weight& nu);

/// Weight multiplicities m_nu for all nu <= depth_bound, with the
/// completeness verdict (sound, never claims completeness it cannot see).
CharacterTable character(const BicharTable& t, const OmegaTable& w, const Weight& lambda,
                         const Weight& mu, const Weight& depth_bound);

struct FinEntry {
    Weight lambda;
    Weight mu;
    CharacterTable table;
};

/// Pairs of the window whose simple module is finite-dimensional within the
/// depth bound.
std::vector<FinEntry> fin_window(const BicharTable& t, const OmegaTable& w,
                                 const std::vector<std::pair<Weight, Weight>>& window,
                                 const Weight& depth_bound);

/// Broken-line profile of a finite-dimensional module of the rank-2 family
/// with chi(a1,a1) a primitive cube root of unity: the unique h in Z_{>=0}^8
/// whose closed octagon carries the support (boundary multiplicity one,
/// remaining support strictly inside). Throws when no or several h fit.
std::vector<unsigned> z3_h_profile(const CharacterTable& ct, const BicharTable& t,
                                   const OmegaTable& w, long odd_cap = -1);

} // namespace gqg
