#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gqg/cyclotomic.hpp"

namespace gqg {

/// Element of the weight lattice Z^l on the basis alpha_1 .. alpha_l.
class Weight {
  public:
    Weight() = default;
    explicit Weight(std::vector<long> coords) : v_(std::move(coords)) {}
    static Weight zero(size_t rank) { return Weight(std::vector<long>(rank, 0)); }
    static Weight unit(size_t rank, size_t i); // alpha_{i+1}

    size_t rank() const { return v_.size(); }
    long operator[](size_t i) const { return v_[i]; }
    const std::vector<long>& coords() const { return v_; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(long k) const;
    Weight& operator+=(const Weight& o) { return *this = *this + o; }
    Weight& operator-=(const Weight& o) { return *this = *this - o; }

    bool operator==(const Weight& o) const { return v_ == o.v_; }
    auto operator<=>(const Weight& o) const = default;

    bool is_zero() const;
    bool nonnegative() const;                  // all coordinates >= 0
    bool dominated_by(const Weight& bound) const; // componentwise <=
    long total() const;                        // coordinate sum

    std::string to_string() const;

  private:
    std::vector<long> v_;
};

/// Graded order used to schedule degreewise work: total degree first, then
/// lexicographic. A well-order on the nonnegative cone.
bool graded_less(const Weight& a, const Weight& b);

/// All nonnegative weights componentwise <= bound, in graded order.
std::vector<Weight> weights_below(const Weight& bound);

/// The bicharacter chi on generators: q[i][j] = chi(alpha_i, alpha_j),
/// extended to the whole lattice by biadditivity.
class BicharTable {
  public:
    BicharTable(const CycField& f, std::vector<std::vector<CycScalar>> q);

    const CycField& field() const { return *field_; }
    size_t rank() const { return q_.size(); }
    const CycScalar& generator(size_t i, size_t j) const { return q_[i][j]; }

    CycScalar chi(const Weight& lambda, const Weight& mu) const;
    /// rho_hat(nu) = prod_j chi(alpha_j, alpha_j)^(nu_j)
    CycScalar rho_hat(const Weight& nu) const;
    /// Table for the transposed bicharacter chi^T(a, b) = chi(b, a).
    BicharTable transposed() const;

  private:
    const CycField* field_;
    std::vector<std::vector<CycScalar>> q_;
};

/// Z-module homomorphism omega on generators, omega(alpha_i) = w[i].
class OmegaTable {
  public:
    OmegaTable(const CycField& f, std::vector<CycScalar> w);
    static OmegaTable trivial(const CycField& f, size_t rank);

    const CycField& field() const { return *field_; }
    size_t rank() const { return w_.size(); }
    const CycScalar& generator(size_t i) const { return w_[i]; }

    CycScalar omega(const Weight& lambda) const;

  private:
    const CycField* field_;
    std::vector<CycScalar> w_;
};

/// The highest-weight functional on the group-algebra part:
/// Lambda(K_{lambda'} L_{mu'}) = chi(lambda, mu') chi(lambda', mu) omega(lambda').
CycScalar lambda_functional(const BicharTable& t, const OmegaTable& w, const Weight& lambda,
                            const Weight& mu, const Weight& lambda_prime, const Weight& mu_prime);

} // namespace gqg
