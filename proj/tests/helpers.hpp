#pragma once

#include <random>

#include "gqg/nichols.hpp"
#include "gqg/weights.hpp"

namespace gqg::testing {

inline CycScalar random_scalar(const CycField& f, std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    while (true) {
        std::vector<std::string> coeffs;
        for (unsigned i = 0; i < f.degree(); ++i) {
            int n = num(rng);
            int d = den(rng);
            coeffs.push_back(std::to_string(n) + "/" + std::to_string(d));
        }
        CycScalar s = CycScalar::from_coeff_strings(f, coeffs);
        if (!nonzero || !s.is_zero()) return s;
    }
}

inline Weight random_weight(size_t rank, std::mt19937_64& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<long> v(rank);
    for (auto& x : v) x = d(rng);
    return Weight(v);
}

inline BicharTable random_bichar(const CycField& f, size_t rank, std::mt19937_64& rng) {
    std::vector<std::vector<CycScalar>> q(rank, std::vector<CycScalar>(rank, CycScalar(f)));
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < rank; ++j) q[i][j] = random_scalar(f, rng, true);
    return BicharTable(f, q);
}

/// chi(a1,a1) = zeta_3, chi(a2,a2) = q, chi(a1,a2) chi(a2,a1) = q^{-1}
/// over Q(zeta_15) with zeta_3 = z^5; q given as a power of z.
inline BicharTable cube_root_table(const CycField& f15, long q_power) {
    CycScalar zeta = CycScalar::root_power(f15, 5);
    CycScalar q = CycScalar::root_power(f15, q_power);
    CycScalar one = CycScalar::one(f15);
    return BicharTable(f15, {{zeta, one}, {q.inverse(), q}});
}

} // namespace gqg::testing
