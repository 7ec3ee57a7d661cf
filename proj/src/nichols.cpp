#include "gqg/nichols.hpp"

#include <algorithm>

namespace gqg {

namespace {

// quick reject: equal length and equal letter multiset
bool same_letter_content(const Word& u, const Word& v) {
    if (u.size() != v.size()) return false;
    unsigned count[10] = {0};
    for (char c : u) ++count[c - '0'];
    for (char c : v) {
        if (count[c - '0'] == 0) return false;
        --count[c - '0'];
    }
    return true;
}

void words_of_degree_rec(const Weight& lambda, size_t rank, Word& cur, std::vector<long>& left,
                         std::vector<Word>& out) {
    bool done = true;
    for (size_t i = 0; i < rank; ++i) {
        if (left[i] > 0) {
            done = false;
            --left[i];
            cur.push_back(static_cast<char>('1' + i));
            words_of_degree_rec(lambda, rank, cur, left, out);
            cur.pop_back();
            ++left[i];
        }
    }
    if (done) out.push_back(cur);
}

} // namespace

const CycScalar& NicholsTable::pairing(const Word& eword, const Word& fword) {
    std::string key;
    key.reserve(eword.size() + fword.size() + 1);
    key += eword;
    key += '|';
    key += fword;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    const CycField& f = field();
    CycScalar value(f);
    if (fword.empty()) {
        value = eword.empty() ? CycScalar::one(f) : CycScalar(f);
    } else if (!same_letter_content(eword, fword)) {
        value = CycScalar(f);
    } else {
        // theta(E_u, F_{j v'}) = sum over positions k with u_k = j of
        //   chi(theta(u_{<k}), alpha_j) * theta(E_{u minus k}, F_{v'})
        unsigned j = word_letter(fword, 0);
        Word rest = fword.substr(1);
        Weight prefix = Weight::zero(rank());
        Weight alpha_j = Weight::unit(rank(), j - 1);
        for (size_t k = 0; k < eword.size(); ++k) {
            unsigned uk = word_letter(eword, k);
            if (uk == j) {
                Word sub = eword.substr(0, k) + eword.substr(k + 1);
                const CycScalar& tail = pairing(sub, rest);
                if (!tail.is_zero()) value += t_.chi(prefix, alpha_j) * tail;
            }
            prefix += Weight::unit(rank(), uk - 1);
        }
    }
    return memo_.emplace(std::move(key), std::move(value)).first->second;
}

CycScalar NicholsTable::pairing_left_peel(const Word& eword, const Word& fword) const {
    const CycField& f = field();
    if (eword.empty()) return fword.empty() ? CycScalar::one(f) : CycScalar(f);
    if (!same_letter_content(eword, fword)) return CycScalar(f);
    // theta(E_{i u'}, F_v) = sum over positions k with v_k = i of
    //   chi(alpha_i, theta(v_{<k})) * theta(E_{u'}, F_{v minus k})
    unsigned i = word_letter(eword, 0);
    Word rest = eword.substr(1);
    Weight prefix = Weight::zero(rank());
    Weight alpha_i = Weight::unit(rank(), i - 1);
    CycScalar value(f);
    for (size_t k = 0; k < fword.size(); ++k) {
        unsigned vk = word_letter(fword, k);
        if (vk == i) {
            Word sub = fword.substr(0, k) + fword.substr(k + 1);
            CycScalar tail = pairing_left_peel(rest, sub);
            if (!tail.is_zero()) value += t_.chi(alpha_i, prefix) * tail;
        }
        prefix += Weight::unit(rank(), vk - 1);
    }
    return value;
}

const std::vector<Word>& NicholsTable::words_of_degree(const Weight& lambda) {
    auto it = words_cache_.find(lambda);
    if (it != words_cache_.end()) return it->second;
    if (!lambda.nonnegative()) throw Error("words_of_degree: degree must be nonnegative");
    std::vector<Word> out;
    Word cur;
    std::vector<long> left = lambda.coords();
    words_of_degree_rec(lambda, rank(), cur, left, out);
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return word_greater(a, b); });
    return words_cache_.emplace(lambda, std::move(out)).first->second;
}

const GramBlock& NicholsTable::block(const Weight& lambda) {
    auto it = blocks_.find(lambda);
    if (it != blocks_.end()) return it->second;

    const CycField& f = field();
    GramBlock b;
    b.degree = lambda;
    b.words = words_of_degree(lambda);
    size_t n = b.words.size();
    for (size_t i = 0; i < n; ++i) b.word_index.emplace(b.words[i], i);

    b.gram.assign(n, zero_vec(f, n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) b.gram[i][j] = pairing(b.words[i], b.words[j]);

    // greedy greatest-word-first pivots: rows for the E side, columns for F
    RowSpace rows(f, n);
    for (size_t i = 0; i < n; ++i) {
        if (rows.add(b.gram[i])) {
            b.epivot_idx.push_back(i);
            b.epivots.push_back(b.words[i]);
        }
    }
    RowSpace cols(f, n);
    for (size_t j = 0; j < n; ++j) {
        Vec col = zero_vec(f, n);
        for (size_t i = 0; i < n; ++i) col[i] = b.gram[i][j];
        if (cols.add(col)) {
            b.fpivot_idx.push_back(j);
            b.fpivots.push_back(b.words[j]);
        }
    }
    b.dim = b.epivot_idx.size();
    if (b.fpivot_idx.size() != b.dim) throw ConsistencyError("gram row and column ranks differ");

    if (b.dim > 0) {
        std::vector<Vec> core(b.dim, zero_vec(f, b.dim));
        for (size_t i = 0; i < b.dim; ++i)
            for (size_t j = 0; j < b.dim; ++j) core[i][j] = b.gram[b.epivot_idx[i]][b.fpivot_idx[j]];
        b.core_inverse = matrix_inverse(f, core);
    }
    return blocks_.emplace(lambda, std::move(b)).first->second;
}

Vec NicholsTable::e_class_vector(const FreeElement& x, const Weight& lambda) {
    const GramBlock& b = block(lambda);
    Vec v = zero_vec(field(), b.dim);
    for (const auto& [w, c] : x.terms()) {
        auto it = b.word_index.find(w);
        if (it == b.word_index.end()) throw Error("e_class_vector: word of wrong degree: " + w);
        const Vec& row = b.gram[it->second];
        for (size_t j = 0; j < b.dim; ++j) {
            const CycScalar& g = row[b.fpivot_idx[j]];
            if (!g.is_zero()) v[j] += c * g;
        }
    }
    return v;
}

Vec NicholsTable::f_class_vector(const FreeElement& y, const Weight& lambda) {
    const GramBlock& b = block(lambda);
    Vec v = zero_vec(field(), b.dim);
    for (const auto& [w, c] : y.terms()) {
        auto it = b.word_index.find(w);
        if (it == b.word_index.end()) throw Error("f_class_vector: word of wrong degree: " + w);
        size_t col = it->second;
        for (size_t i = 0; i < b.dim; ++i) {
            const CycScalar& g = b.gram[b.epivot_idx[i]][col];
            if (!g.is_zero()) v[i] += c * g;
        }
    }
    return v;
}

Vec NicholsTable::e_coordinates(const FreeElement& x, const Weight& lambda) {
    const GramBlock& b = block(lambda);
    Vec v = e_class_vector(x, lambda);
    // class = a^T * core  =>  a^T = v^T * core^{-1}
    Vec a = zero_vec(field(), b.dim);
    for (size_t i = 0; i < b.dim; ++i)
        for (size_t j = 0; j < b.dim; ++j)
            if (!v[j].is_zero()) a[i] += v[j] * b.core_inverse[j][i];
    return a;
}

Vec NicholsTable::f_coordinates(const FreeElement& y, const Weight& lambda) {
    const GramBlock& b = block(lambda);
    Vec v = f_class_vector(y, lambda);
    // class = core * b  =>  b = core^{-1} * v
    Vec a = zero_vec(field(), b.dim);
    for (size_t i = 0; i < b.dim; ++i)
        for (size_t j = 0; j < b.dim; ++j)
            if (!v[j].is_zero()) a[i] += b.core_inverse[i][j] * v[j];
    return a;
}

const FreeElement& NicholsTable::super_letter_cached(const Word& u) {
    auto it = super_cache_.find(u);
    if (it != super_cache_.end()) return it->second;
    return super_cache_.emplace(u, super_letter(u, t_)).first->second;
}

} // namespace gqg
