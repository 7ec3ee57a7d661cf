#include "gqg/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gqg {

namespace {

unsigned euler_phi(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

int poly_degree(const std::vector<Rational>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

// Exact division, remainder must come out zero when exact=true.
std::vector<Rational> poly_div(const std::vector<Rational>& num, const std::vector<Rational>& den,
                               std::vector<Rational>* remainder = nullptr) {
    int dn = poly_degree(num), dd = poly_degree(den);
    if (dd < 0) throw Error("polynomial division by zero");
    std::vector<Rational> rem = num;
    std::vector<Rational> quot(dn >= dd ? static_cast<size_t>(dn - dd + 1) : 1, Rational(0));
    for (int k = dn; k >= dd; --k) {
        Rational c = rem[static_cast<size_t>(k)] / den[static_cast<size_t>(dd)];
        if (c == 0) continue;
        quot[static_cast<size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(k - dd + j)] -= c * den[static_cast<size_t>(j)];
    }
    if (remainder) {
        remainder->assign(rem.begin(), rem.end());
        remainder->resize(static_cast<size_t>(std::max(poly_degree(rem) + 1, 1)));
    }
    return quot;
}

std::vector<Rational> cyclotomic_polynomial(unsigned n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Rational> num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<Rational> phi_d = cyclotomic_polynomial(d);
        num = poly_div(num, phi_d);
    }
    num.resize(static_cast<size_t>(poly_degree(num) + 1));
    return num;
}

} // namespace

CycField::CycField(unsigned conductor) : n_(conductor) {
    if (n_ == 0) throw Error("conductor must be positive");
    phi_ = euler_phi(n_);
    build();
}

void CycField::build() {
    modulus_ = cyclotomic_polynomial(n_);
    // x^phi on the power basis (modulus is monic)
    std::vector<Rational> head(phi_, Rational(0));
    for (unsigned i = 0; i < phi_; ++i) head[i] = -modulus_[i];

    reduction_.clear();
    if (phi_ >= 1) {
        std::vector<Rational> row = head;
        reduction_.push_back(row);
        for (unsigned k = 1; k + 1 < phi_; ++k) {
            // row <- row * x mod Phi
            std::vector<Rational> next(phi_, Rational(0));
            for (unsigned i = 0; i + 1 < phi_; ++i) next[i + 1] = row[i];
            Rational top = row[phi_ - 1];
            if (top != 0)
                for (unsigned i = 0; i < phi_; ++i) next[i] += top * head[i];
            reduction_.push_back(next);
            row = next;
        }
    }

    unit_powers_.clear();
    std::vector<Rational> p(phi_, Rational(0));
    p[0] = 1;
    unit_powers_.push_back(p);
    for (unsigned k = 1; k < n_; ++k) {
        std::vector<Rational> next(phi_, Rational(0));
        for (unsigned i = 0; i + 1 < phi_; ++i) next[i + 1] = p[i];
        Rational top = p[phi_ - 1];
        if (top != 0)
            for (unsigned i = 0; i < phi_; ++i) next[i] += top * head[i];
        unit_powers_.push_back(next);
        p = next;
    }
}

const std::vector<Rational>& CycField::power_row(unsigned k) const {
    return unit_powers_[k % n_];
}

CycScalar::CycScalar(const CycField& f, const Rational& rat) : field_(&f), c_(f.degree(), Rational(0)) {
    c_[0] = rat;
    c_[0].canonicalize();
}

CycScalar::CycScalar(const CycField& f, long value) : field_(&f), c_(f.degree(), Rational(0)) {
    c_[0] = value;
}

CycScalar CycScalar::root_power(const CycField& f, long k) {
    long n = static_cast<long>(f.conductor());
    long r = ((k % n) + n) % n;
    CycScalar s(f);
    s.c_ = f.power_row(static_cast<unsigned>(r));
    return s;
}

const CycField& CycScalar::field() const {
    if (!field_) throw Error("use of default-constructed scalar");
    return *field_;
}

bool CycScalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycScalar::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycScalar::rational_value() const {
    if (!is_rational()) throw Error("scalar is not rational: " + to_string());
    return c_[0];
}

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

static void check_same_field(const CycScalar& a, const CycScalar& b) {
    if (a.field().conductor() != b.field().conductor())
        throw Error("scalars from different cyclotomic fields");
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
    check_same_field(*this, o);
    CycScalar r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
    check_same_field(*this, o);
    CycScalar r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
    check_same_field(*this, o);
    const CycField& f = field();
    unsigned phi = f.degree();
    CycScalar r(f);

    // monomial fast path (common with root-of-unity tables)
    auto single_term = [phi](const std::vector<Rational>& v) -> int {
        int idx = -1;
        for (unsigned i = 0; i < phi; ++i) {
            if (v[i] != 0) {
                if (idx >= 0) return -2;
                idx = static_cast<int>(i);
            }
        }
        return idx;
    };
    int sa = single_term(c_), sb = single_term(o.c_);
    if (sa == -1 || sb == -1) return r;
    if (sa >= 0 || sb >= 0) {
        const std::vector<Rational>& dense = (sa >= 0) ? o.c_ : c_;
        unsigned shift = static_cast<unsigned>(sa >= 0 ? sa : sb);
        const Rational& scale = (sa >= 0) ? c_[static_cast<size_t>(sa)] : o.c_[static_cast<size_t>(sb)];
        for (unsigned j = 0; j < phi; ++j) {
            if (dense[j] == 0) continue;
            Rational v = scale * dense[j];
            const std::vector<Rational>& row = f.power_row(j + shift);
            for (unsigned i = 0; i < phi; ++i)
                if (row[i] != 0) r.c_[i] += v * row[i];
        }
        return r;
    }

    std::vector<Rational> conv(2 * phi - 1, Rational(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    for (unsigned k = 0; k < phi; ++k) r.c_[k] = conv[k];
    for (unsigned k = phi; k < 2 * phi - 1; ++k) {
        if (conv[k] == 0) continue;
        const std::vector<Rational>& row = f.power_row(k);
        for (unsigned i = 0; i < phi; ++i)
            if (row[i] != 0) r.c_[i] += conv[k] * row[i];
    }
    return r;
}

CycScalar CycScalar::operator/(const CycScalar& o) const { return *this * o.inverse(); }

bool CycScalar::operator==(const CycScalar& o) const {
    check_same_field(*this, o);
    return c_ == o.c_;
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw Error("division by zero in Q(zeta)");
    const CycField& f = field();
    if (is_rational()) {
        CycScalar r(f);
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // extended Euclid: s*this + t*Phi = gcd = const
    std::vector<Rational> r0 = f.modulus();
    std::vector<Rational> r1 = c_;
    r1.resize(static_cast<size_t>(std::max(poly_degree(r1) + 1, 1)));
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
    while (poly_degree(r1) > 0) {
        std::vector<Rational> rem;
        std::vector<Rational> q = poly_div(r0, r1, &rem);
        // s2 = s0 - q*s1
        std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (poly_degree(r1) != 0) throw Error("inverse failed: element not coprime to modulus");
    Rational unit = r1[0];
    CycScalar result(f);
    for (size_t i = 0; i < s1.size() && i < result.c_.size(); ++i) result.c_[i] = s1[i] / unit;
    // s1 may exceed the basis length by construction only when q had degree 0 throughout;
    // anything further must be zero for a valid Bezout cofactor mod Phi.
    for (size_t i = result.c_.size(); i < s1.size(); ++i)
        if (s1[i] != 0) throw Error("inverse cofactor escaped the power basis");
    return result;
}

CycScalar CycScalar::pow(long e) const {
    const CycField& f = field();
    if (e == 0) return CycScalar::one(f);
    CycScalar base = *this;
    unsigned long k;
    if (e < 0) {
        base = base.inverse();
        k = static_cast<unsigned long>(-(e + 1)) + 1;
    } else {
        k = static_cast<unsigned long>(e);
    }
    CycScalar acc = CycScalar::one(f);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Rational CycScalar::field_norm() const {
    const CycField& f = field();
    unsigned phi = f.degree();
    // determinant of multiplication by *this on the power basis
    std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi, Rational(0)));
    CycScalar col = *this;
    for (unsigned j = 0; j < phi; ++j) {
        if (j > 0) col = col * CycScalar::root_power(f, 1);
        for (unsigned i = 0; i < phi; ++i) m[i][j] = col.c_[i];
    }
    Rational det(1);
    for (unsigned k = 0; k < phi; ++k) {
        unsigned pivot = k;
        while (pivot < phi && m[pivot][k] == 0) ++pivot;
        if (pivot == phi) return Rational(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        Rational inv = 1 / m[k][k];
        for (unsigned i = k + 1; i < phi; ++i) {
            if (m[i][k] == 0) continue;
            Rational factor = m[i][k] * inv;
            for (unsigned j = k; j < phi; ++j) m[i][j] -= factor * m[k][j];
        }
    }
    return det;
}

std::string CycScalar::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
        const Rational& r = c_[static_cast<size_t>(k)];
        if (r == 0) continue;
        Rational a = r;
        if (!first) {
            out << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        } else {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        }
        bool unit_coeff = (a == 1) && k > 0;
        if (!unit_coeff) out << a.get_str();
        if (k > 0) {
            if (!unit_coeff) out << "*";
            out << "z";
            if (k > 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    return out.str();
}

std::vector<std::string> CycScalar::to_coeff_strings() const {
    std::vector<std::string> v;
    v.reserve(c_.size());
    for (const auto& r : c_) v.push_back(r.get_str());
    return v;
}

CycScalar CycScalar::from_coeff_strings(const CycField& f, const std::vector<std::string>& v) {
    if (v.size() != f.degree()) throw Error("scalar coefficient count does not match phi(n)");
    CycScalar s(f);
    for (size_t i = 0; i < v.size(); ++i) {
        try {
            s.c_[i] = Rational(v[i]);
        } catch (const std::invalid_argument&) {
            throw Error("bad rational literal: " + v[i]);
        }
        s.c_[i].canonicalize();
    }
    return s;
}

namespace {

struct ScalarParser {
    const CycField& f;
    const std::string& s;
    size_t pos = 0;

    char peek() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw Error("scalar literal: expected '" + std::string(1, c) + "' in " + s);
        ++pos;
    }

    long integer() {
        peek();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw Error("scalar literal: expected integer in " + s);
        return std::stol(s.substr(start, pos - start));
    }

    CycScalar base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            CycScalar e = expr();
            expect(')');
            return e;
        }
        if (c == 'z') {
            ++pos;
            return CycScalar::root_power(f, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return CycScalar(f, Rational(integer()));
        throw Error("scalar literal: unexpected character '" + std::string(1, c) + "' in " + s);
    }

    CycScalar factor() {
        CycScalar b = base();
        if (peek() == '^') {
            ++pos;
            long e = integer();
            b = b.pow(e);
        }
        return b;
    }

    CycScalar term() {
        CycScalar v = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                v *= factor();
            } else if (c == '/') {
                ++pos;
                v = v / factor();
            } else if (c == 'z' || c == '(') {
                // implicit product like "2z"
                v *= factor();
            } else {
                break;
            }
        }
        return v;
    }

    CycScalar expr() {
        CycScalar v(f);
        char c = peek();
        bool neg = false;
        if (c == '-') {
            neg = true;
            ++pos;
        } else if (c == '+') {
            ++pos;
        }
        v = term();
        if (neg) v = -v;
        while (true) {
            c = peek();
            if (c == '+') {
                ++pos;
                v += term();
            } else if (c == '-') {
                ++pos;
                v -= term();
            } else {
                break;
            }
        }
        return v;
    }
};

} // namespace

CycScalar parse_scalar(const CycField& f, const std::string& text) {
    ScalarParser p{f, text};
    CycScalar v = p.expr();
    if (p.peek() != '\0') throw Error("scalar literal: trailing garbage in " + text);
    return v;
}

} // namespace gqg
