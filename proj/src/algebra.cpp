#include "gqg/algebra.hpp"

#include <algorithm>

namespace gqg {

U0Element U0Element::kl(const CycField& f, const Weight& lambda, const Weight& mu,
                        const CycScalar& c) {
    U0Element u(f);
    u.add(lambda, mu, c);
    return u;
}

void U0Element::add(const Weight& lambda, const Weight& mu, const CycScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(lambda, mu);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const CycScalar* U0Element::coeff(const Weight& lambda, const Weight& mu) const {
    auto it = terms_.find(std::make_pair(lambda, mu));
    return it == terms_.end() ? nullptr : &it->second;
}

U0Element U0Element::operator+(const U0Element& o) const {
    U0Element r = *this;
    for (const auto& [km, c] : o.terms_) r.add(km.first, km.second, c);
    return r;
}

U0Element U0Element::operator-(const U0Element& o) const {
    U0Element r = *this;
    for (const auto& [km, c] : o.terms_) r.add(km.first, km.second, -c);
    return r;
}

U0Element U0Element::scaled(const CycScalar& c) const {
    U0Element r(*field_);
    if (c.is_zero()) return r;
    for (const auto& [km, x] : terms_) r.add(km.first, km.second, x * c);
    return r;
}

U0Element U0Element::operator*(const U0Element& o) const {
    U0Element r(*field_);
    for (const auto& [ab, c] : terms_)
        for (const auto& [cd, d] : o.terms_)
            r.add(ab.first + cd.first, ab.second + cd.second, c * d);
    return r;
}

void AlgebraElement::add(const NormalKey& key, const CycScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, -c);
    return r;
}

AlgebraElement AlgebraElement::scaled(const CycScalar& c) const {
    AlgebraElement r(*field_);
    if (c.is_zero()) return r;
    for (const auto& [k, x] : terms_) r.add(k, x * c);
    return r;
}

U0Element sh_project(const AlgebraElement& a) {
    U0Element u(a.field());
    for (const auto& [key, c] : a.terms())
        if (key.f.empty() && key.e.empty()) u.add(key.k, key.l, c);
    return u;
}

UContext::UContext(NicholsTable& nt, const Weight& table_bound) : nt_(&nt), bound_(table_bound) {
    if (!bound_.nonnegative()) throw Error("UContext: table bound must be nonnegative");
    for (const Weight& d : weights_below(bound_)) nt_->block(d);
}

void UContext::check_degree(const Weight& d) const {
    if (!d.dominated_by(bound_))
        throw Error("straightening escaped the precomputed pivot tables at degree " + d.to_string() +
                    " (bound " + bound_.to_string() + ")");
}

AlgebraElement UContext::one() const {
    return kl(Weight::zero(rank()), Weight::zero(rank()));
}

AlgebraElement UContext::kl(const Weight& lambda, const Weight& mu) const {
    AlgebraElement a(field());
    a.add(NormalKey{Word(), lambda, mu, Word()}, CycScalar::one(field()));
    return a;
}

AlgebraElement UContext::e_generator(unsigned i) const {
    AlgebraElement a(field());
    Weight z = Weight::zero(rank());
    a.add(NormalKey{Word(), z, z, word_from_letters({i})}, CycScalar::one(field()));
    return a;
}

AlgebraElement UContext::f_generator(unsigned i) const {
    AlgebraElement a(field());
    Weight z = Weight::zero(rank());
    a.add(NormalKey{word_from_letters({i}), z, z, Word()}, CycScalar::one(field()));
    return a;
}

AlgebraElement UContext::from_u0(const U0Element& u) const {
    AlgebraElement a(field());
    for (const auto& [km, c] : u.terms()) a.add(NormalKey{Word(), km.first, km.second, Word()}, c);
    return a;
}

AlgebraElement UContext::monomial(const Word& fword, const Weight& k, const Weight& l,
                                  const Word& eword) const {
    Raw raw;
    raw.emplace(NormalKey{fword, k, l, eword}, CycScalar::one(field()));
    return normalize(raw);
}

void UContext::raw_add(Raw& raw, const NormalKey& key, const CycScalar& c) {
    if (c.is_zero()) return;
    auto it = raw.find(key);
    if (it == raw.end()) {
        raw.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) raw.erase(it);
    }
}

// E_{eword} * F_i in free normal order, by peeling the last E letter:
// E_{e'j} F_i = (E_{e'} F_i) E_j + delta_ij (-E_{e'} K_{a_j} + E_{e'} L_{a_j})
const UContext::Raw& UContext::ef_expand(const Word& eword, unsigned i) const {
    auto cache_key = std::make_pair(eword, i);
    auto it = ef_cache_.find(cache_key);
    if (it != ef_cache_.end()) return it->second;

    Raw out;
    Weight z = Weight::zero(rank());
    if (eword.empty()) {
        out.emplace(NormalKey{word_from_letters({i}), z, z, Word()}, CycScalar::one(field()));
    } else {
        Word head = eword.substr(0, eword.size() - 1);
        unsigned j = word_letter(eword, eword.size() - 1);
        const Raw& base = ef_expand(head, i);
        for (const auto& [key, c] : base) {
            NormalKey shifted = key;
            shifted.e.push_back(eword.back());
            raw_add(out, shifted, c);
        }
        if (i == j) {
            Weight alpha_j = Weight::unit(rank(), j - 1);
            Weight theta_head = word_degree(head, rank());
            CycScalar kfac = -bichar().chi(alpha_j, theta_head).inverse();
            CycScalar lfac = bichar().chi(theta_head, alpha_j);
            raw_add(out, NormalKey{Word(), alpha_j, z, head}, kfac);
            raw_add(out, NormalKey{Word(), z, alpha_j, head}, lfac);
        }
    }
    return ef_cache_.emplace(std::move(cache_key), std::move(out)).first->second;
}

UContext::Raw UContext::mul_f(const Raw& in, unsigned i) const {
    Raw out;
    Weight alpha_i = Weight::unit(rank(), i - 1);
    for (const auto& [key, c] : in) {
        const Raw& ef = ef_expand(key.e, i);
        for (const auto& [ekey, ec] : ef) {
            CycScalar scalar = c * ec;
            if (!ekey.f.empty())
                scalar *= bichar().chi(key.k, alpha_i).inverse() * bichar().chi(alpha_i, key.l);
            raw_add(out, NormalKey{key.f + ekey.f, key.k + ekey.k, key.l + ekey.l, ekey.e}, scalar);
        }
    }
    return out;
}

UContext::Raw UContext::mul_k(const Raw& in, const Weight& nu) const {
    if (nu.is_zero()) return in;
    Raw out;
    for (const auto& [key, c] : in) {
        CycScalar scalar = c * bichar().chi(nu, word_degree(key.e, rank())).inverse();
        raw_add(out, NormalKey{key.f, key.k + nu, key.l, key.e}, scalar);
    }
    return out;
}

UContext::Raw UContext::mul_l(const Raw& in, const Weight& nu) const {
    if (nu.is_zero()) return in;
    Raw out;
    for (const auto& [key, c] : in) {
        CycScalar scalar = c * bichar().chi(word_degree(key.e, rank()), nu);
        raw_add(out, NormalKey{key.f, key.k, key.l + nu, key.e}, scalar);
    }
    return out;
}

UContext::Raw UContext::mul_e(const Raw& in, unsigned i) {
    Raw out;
    for (const auto& [key, c] : in) {
        NormalKey shifted = key;
        shifted.e.push_back(static_cast<char>('0' + i));
        out.emplace(shifted, c);
    }
    return out;
}

AlgebraElement UContext::normalize(const Raw& raw) const {
    AlgebraElement result(field());
    for (const auto& [key, c] : raw) {
        Weight df = word_degree(key.f, rank());
        Weight de = word_degree(key.e, rank());
        check_degree(df);
        check_degree(de);
        const GramBlock& fb = nt_->block(df);
        const GramBlock& eb = nt_->block(de);

        // fast path: already a pair of pivot words
        bool f_pivot = std::find(fb.fpivots.begin(), fb.fpivots.end(), key.f) != fb.fpivots.end();
        bool e_pivot = std::find(eb.epivots.begin(), eb.epivots.end(), key.e) != eb.epivots.end();
        if (f_pivot && e_pivot) {
            result.add(key, c);
            continue;
        }

        Vec fc, ec;
        if (f_pivot) {
            fc = zero_vec(field(), fb.dim);
            for (size_t i = 0; i < fb.dim; ++i)
                if (fb.fpivots[i] == key.f) fc[i] = CycScalar::one(field());
        } else {
            fc = nt_->f_coordinates(FreeElement::monomial(field(), key.f, CycScalar::one(field())), df);
        }
        if (e_pivot) {
            ec = zero_vec(field(), eb.dim);
            for (size_t i = 0; i < eb.dim; ++i)
                if (eb.epivots[i] == key.e) ec[i] = CycScalar::one(field());
        } else {
            ec = nt_->e_coordinates(FreeElement::monomial(field(), key.e, CycScalar::one(field())), de);
        }
        for (size_t i = 0; i < fb.dim; ++i) {
            if (fc[i].is_zero()) continue;
            for (size_t j = 0; j < eb.dim; ++j) {
                if (ec[j].is_zero()) continue;
                result.add(NormalKey{fb.fpivots[i], key.k, key.l, eb.epivots[j]}, c * fc[i] * ec[j]);
            }
        }
    }
    return result;
}

AlgebraElement UContext::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    Raw total;
    for (const auto& [bkey, bc] : b.terms_) {
        Raw cur = a.terms_;
        for (char ch : bkey.f) cur = mul_f(cur, static_cast<unsigned>(ch - '0'));
        cur = mul_k(cur, bkey.k);
        cur = mul_l(cur, bkey.l);
        for (char ch : bkey.e) cur = mul_e(cur, static_cast<unsigned>(ch - '0'));
        for (const auto& [key, c] : cur) raw_add(total, key, c * bc);
    }
    return normalize(total);
}

} // namespace gqg
