#include "gqg/words.hpp"

#include <algorithm>

namespace gqg {

Word word_from_letters(const std::vector<unsigned>& letters) {
    Word w;
    w.reserve(letters.size());
    for (unsigned x : letters) {
        if (x < 1 || x > 9) throw Error("letter out of range (alphabet capped at 9)");
        w.push_back(static_cast<char>('0' + x));
    }
    return w;
}

unsigned word_letter(const Word& w, size_t pos) {
    return static_cast<unsigned>(w[pos] - '0');
}

Weight word_degree(const Word& w, size_t rank) {
    Weight d = Weight::zero(rank);
    std::vector<long> coords(rank, 0);
    for (char c : w) {
        size_t i = static_cast<size_t>(c - '1');
        if (i >= rank) throw Error("word letter exceeds rank");
        ++coords[i];
    }
    return Weight(coords);
}

WordOrder word_compare(const Word& u, const Word& v) {
    size_t m = std::min(u.size(), v.size());
    for (size_t s = 0; s < m; ++s) {
        if (u[s] != v[s]) return u[s] < v[s] ? WordOrder::greater : WordOrder::less;
    }
    if (u.size() == v.size()) return WordOrder::equal;
    return u.size() < v.size() ? WordOrder::greater : WordOrder::less;
}

bool is_standard(const Word& u) {
    if (u.size() <= 1) return true;
    for (size_t cut = 1; cut < u.size(); ++cut) {
        Word rotated = u.substr(cut) + u.substr(0, cut);
        if (word_compare(u, rotated) != WordOrder::greater) return false;
    }
    return true;
}

std::pair<Word, Word> shirshov_factorize(const Word& u) {
    if (u.size() < 2) throw Error("shirshov_factorize needs length >= 2");
    if (!is_standard(u)) throw Error("shirshov_factorize: word is not standard: " + u);
    Word head, tail;
    for (size_t cut = 1; cut < u.size(); ++cut) {
        Word v = u.substr(0, cut), w = u.substr(cut);
        if (is_standard(v) && is_standard(w)) {
            head = v;
            tail = w;
            break;
        }
    }
    if (head.empty()) throw Error("shirshov_factorize: no standard split of " + u);
    // every standard left factor extends the shortest one
    for (size_t cut = head.size() + 1; cut < u.size(); ++cut) {
        Word v = u.substr(0, cut), w = u.substr(cut);
        if (is_standard(v) && is_standard(w) && v.compare(0, head.size(), head) != 0)
            throw Error("shirshov_factorize: common-prefix property violated for " + u);
    }
    if (!word_greater(head, tail)) throw Error("shirshov_factorize: head not greater than tail for " + u);
    return {head, tail};
}

namespace {

void enumerate_rec(const Weight& bound, size_t rank, Word& cur, Weight& degree,
                   std::vector<Word>& out) {
    if (!cur.empty() && is_standard(cur)) out.push_back(cur);
    for (size_t i = 0; i < rank; ++i) {
        if (degree[i] + 1 > bound[i]) continue;
        cur.push_back(static_cast<char>('1' + i));
        degree += Weight::unit(rank, i);
        enumerate_rec(bound, rank, cur, degree, out);
        degree -= Weight::unit(rank, i);
        cur.pop_back();
    }
}

} // namespace

std::vector<Word> enumerate_standard(const Weight& bound) {
    if (!bound.nonnegative()) throw Error("enumerate_standard: bound must be nonnegative");
    std::vector<Word> out;
    Word cur;
    Weight degree = Weight::zero(bound.rank());
    enumerate_rec(bound, bound.rank(), cur, degree, out);
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return word_greater(a, b); });
    return out;
}

} // namespace gqg
