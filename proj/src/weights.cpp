#include "gqg/weights.hpp"

#include <algorithm>
#include <sstream>

namespace gqg {

Weight Weight::unit(size_t rank, size_t i) {
    Weight w = Weight::zero(rank);
    w.v_[i] = 1;
    return w;
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < v_.size(); ++i) r.v_[i] += o.v_[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < v_.size(); ++i) r.v_[i] -= o.v_[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& x : r.v_) x = -x;
    return r;
}

Weight Weight::operator*(long k) const {
    Weight r = *this;
    for (auto& x : r.v_) x *= k;
    return r;
}

bool Weight::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](long x) { return x == 0; });
}

bool Weight::nonnegative() const {
    return std::all_of(v_.begin(), v_.end(), [](long x) { return x >= 0; });
}

bool Weight::dominated_by(const Weight& bound) const {
    for (size_t i = 0; i < v_.size(); ++i)
        if (v_[i] > bound.v_[i]) return false;
    return true;
}

long Weight::total() const {
    long s = 0;
    for (long x : v_) s += x;
    return s;
}

std::string Weight::to_string() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < v_.size(); ++i) {
        if (i) out << ",";
        out << v_[i];
    }
    out << ")";
    return out.str();
}

bool graded_less(const Weight& a, const Weight& b) {
    long ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return a.coords() < b.coords();
}

std::vector<Weight> weights_below(const Weight& bound) {
    std::vector<Weight> out;
    std::vector<long> cur(bound.rank(), 0);
    while (true) {
        out.emplace_back(cur);
        size_t i = 0;
        while (i < cur.size()) {
            if (cur[i] < bound[i]) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
            ++i;
        }
        if (i == cur.size()) break;
    }
    std::sort(out.begin(), out.end(), graded_less);
    return out;
}

BicharTable::BicharTable(const CycField& f, std::vector<std::vector<CycScalar>> q)
    : field_(&f), q_(std::move(q)) {
    for (const auto& row : q_) {
        if (row.size() != q_.size()) throw Error("bicharacter table must be square");
        for (const auto& s : row)
            if (s.is_zero()) throw Error("bicharacter values must be nonzero");
    }
}

CycScalar BicharTable::chi(const Weight& lambda, const Weight& mu) const {
    if (lambda.rank() != rank() || mu.rank() != rank())
        throw Error("chi: weight rank mismatch");
    CycScalar r = CycScalar::one(*field_);
    for (size_t i = 0; i < rank(); ++i) {
        if (lambda[i] == 0) continue;
        for (size_t j = 0; j < rank(); ++j) {
            long e = lambda[i] * mu[j];
            if (e == 0) continue;
            r *= q_[i][j].pow(e);
        }
    }
    return r;
}

CycScalar BicharTable::rho_hat(const Weight& nu) const {
    CycScalar r = CycScalar::one(*field_);
    for (size_t j = 0; j < rank(); ++j)
        if (nu[j] != 0) r *= q_[j][j].pow(nu[j]);
    return r;
}

BicharTable BicharTable::transposed() const {
    std::vector<std::vector<CycScalar>> qt(rank(), std::vector<CycScalar>(rank(), CycScalar(*field_)));
    for (size_t i = 0; i < rank(); ++i)
        for (size_t j = 0; j < rank(); ++j) qt[i][j] = q_[j][i];
    return BicharTable(*field_, std::move(qt));
}

OmegaTable::OmegaTable(const CycField& f, std::vector<CycScalar> w) : field_(&f), w_(std::move(w)) {
    for (const auto& s : w_)
        if (s.is_zero()) throw Error("omega values must be nonzero");
}

OmegaTable OmegaTable::trivial(const CycField& f, size_t rank) {
    return OmegaTable(f, std::vector<CycScalar>(rank, CycScalar::one(f)));
}

CycScalar OmegaTable::omega(const Weight& lambda) const {
    if (lambda.rank() != rank()) throw Error("omega: weight rank mismatch");
    CycScalar r = CycScalar::one(*field_);
    for (size_t i = 0; i < rank(); ++i)
        if (lambda[i] != 0) r *= w_[i].pow(lambda[i]);
    return r;
}

CycScalar lambda_functional(const BicharTable& t, const OmegaTable& w, const Weight& lambda,
                            const Weight& mu, const Weight& lambda_prime, const Weight& mu_prime) {
    return t.chi(lambda, mu_prime) * t.chi(lambda_prime, mu) * w.omega(lambda_prime);
}

} // namespace gqg
