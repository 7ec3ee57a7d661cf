#include "gqg/qcombinatorics.hpp"

#include <algorithm>
#include <vector>

namespace gqg {

CycScalar q_number(unsigned m, const CycScalar& x) {
    const CycField& f = x.field();
    CycScalar sum(f);
    CycScalar p = CycScalar::one(f);
    for (unsigned r = 1; r <= m; ++r) {
        sum += p;
        p *= x;
    }
    return sum;
}

CycScalar q_factorial(unsigned m, const CycScalar& x) {
    const CycField& f = x.field();
    CycScalar prod = CycScalar::one(f);
    for (unsigned r = 1; r <= m; ++r) prod *= q_number(r, x);
    return prod;
}

CycScalar q_binomial(unsigned m, unsigned k, const CycScalar& x) {
    if (k > m) throw Error("q_binomial: k out of range");
    const CycField& f = x.field();
    // row DP on (n choose j)_x = (n-1 choose j)_x + x^(n-j) (n-1 choose j-1)_x
    std::vector<CycScalar> row(k + 1, CycScalar(f));
    row[0] = CycScalar::one(f);
    for (unsigned n = 1; n <= m; ++n) {
        for (unsigned j = std::min(n, k); j >= 1; --j)
            row[j] = row[j] + x.pow(static_cast<long>(n - j)) * row[j - 1];
    }
    return row[k];
}

std::optional<long> power_index(const CycScalar& base, const CycScalar& value, long search_cap) {
    if (base.is_zero() || value.is_zero()) throw Error("power_index: arguments must be nonzero");
    const CycField& f = base.field();
    if (base.is_one()) return value.is_one() ? std::optional<long>(0) : std::nullopt;

    unsigned order = char_order(base);
    if (order >= 2) {
        CycScalar p = CycScalar::one(f);
        for (unsigned t = 0; t < order; ++t) {
            if (p == value) return static_cast<long>(t);
            p *= base;
        }
        return std::nullopt;
    }

    auto abs_norm = [](const CycScalar& s) {
        Rational n = s.field_norm();
        return n < 0 ? Rational(-n) : n;
    };
    Rational nb = abs_norm(base);
    Rational nv = abs_norm(value);
    if (nb != 1) {
        if (nv == 1) return value.is_one() ? std::optional<long>(0) : std::nullopt;
        long sign = 1;
        if (nb < 1) {
            nb = 1 / nb;
            sign = -1;
        }
        if (nv < 1) {
            // |N(base^t)| and |N(value)| sit on the same side of 1
            nv = 1 / nv;
            sign = -sign;
        }
        Rational acc = nb;
        for (long t = 1;; ++t) {
            if (acc == nv) return base.pow(sign * t) == value ? std::optional<long>(sign * t) : std::nullopt;
            if (acc > nv) return std::nullopt;
            acc *= nb;
        }
    }

    // norm-one unit of infinite order: bounded two-sided scan
    CycScalar pos = CycScalar::one(f), neg = CycScalar::one(f);
    CycScalar inv = base.inverse();
    for (long t = 0; t <= search_cap; ++t) {
        if (pos == value) return t;
        if (t > 0 && neg == value) return -t;
        pos *= base;
        neg *= inv;
    }
    return std::nullopt;
}

unsigned char_order(const CycScalar& x) {
    if (x.is_zero()) throw Error("char_order undefined at 0");
    if (x.is_one()) return 0;
    const CycField& f = x.field();
    // Roots of unity in Q(zeta_n) have order dividing lcm(2, n).
    unsigned limit = f.conductor() % 2 == 0 ? f.conductor() : 2 * f.conductor();
    CycScalar p = x;
    for (unsigned r = 2; r <= limit; ++r) {
        p *= x;
        if (p.is_one()) return r;
    }
    return 0;
}

} // namespace gqg
