#include "gqg/roots.hpp"

#include <algorithm>
#include <map>

namespace gqg {

const RootDatum* RootSystem::find(const Weight& beta) const {
    for (const auto& r : roots)
        if (r.root == beta) return &r;
    return nullptr;
}

std::vector<Weight> RootSystem::roots_with_trivial_self_pairing(const BicharTable& t) const {
    std::vector<Weight> bad;
    for (const auto& r : roots)
        if (t.chi(r.root, r.root).is_one()) bad.push_back(r.root);
    return bad;
}

namespace {

// PBW monomials of the exact target degree in hard letters strictly below
// `limit`, fed to `emit` as collected free-algebra products.
struct MonomialEnumerator {
    NicholsTable& nt;
    const std::vector<Word>& letters; // ascending word order
    const Word& limit;
    size_t rank;

    template <typename F>
    void run(const Weight& target, F&& emit) {
        FreeElement unit = FreeElement::monomial(nt.field(), Word(), CycScalar::one(nt.field()));
        rec(0, target, unit, emit);
    }

    template <typename F>
    void rec(size_t pos, const Weight& remaining, const FreeElement& acc, F&& emit) {
        if (remaining.is_zero()) {
            emit(acc);
            return;
        }
        for (size_t p = pos; p < letters.size(); ++p) {
            const Word& h = letters[p];
            if (!word_less(h, limit)) continue;
            Weight deg = word_degree(h, rank);
            Weight rest = remaining - deg;
            if (!rest.nonnegative()) continue;
            const FreeElement& bracket = nt.super_letter_cached(h);
            FreeElement cur = acc * bracket;
            while (true) {
                rec(p + 1, rest, cur, emit);
                rest = rest - deg;
                if (!rest.nonnegative()) break;
                cur = cur * bracket;
            }
        }
    }
};

bool is_hard(NicholsTable& nt, const std::vector<Word>& hard_sorted, const Word& u) {
    size_t rank = nt.rank();
    Weight lambda = word_degree(u, rank);
    const GramBlock& b = nt.block(lambda);
    RowSpace span(nt.field(), b.dim);
    MonomialEnumerator en{nt, hard_sorted, u, rank};
    en.run(lambda, [&](const FreeElement& mono) { span.add(nt.e_class_vector(mono, lambda)); });
    Vec image = nt.e_class_vector(nt.super_letter_cached(u), lambda);
    return !span.contains(image);
}

} // namespace

RootSystem sieve_roots(NicholsTable& nt, const Weight& bound) {
    if (!bound.nonnegative()) throw Error("sieve_roots: bound must be nonnegative");
    size_t rank = nt.rank();
    std::vector<Word> candidates = enumerate_standard(bound);
    // increasing degree, and within a degree increasing word order, so every
    // hard letter a monomial may use is decided before it is needed
    std::sort(candidates.begin(), candidates.end(), [rank](const Word& a, const Word& b) {
        Weight da = word_degree(a, rank), db = word_degree(b, rank);
        if (da != db) return graded_less(da, db);
        return word_less(a, b);
    });

    std::vector<Word> hard_sorted; // ascending
    std::map<Weight, std::vector<Word>> hard_by_degree;
    for (const Word& u : candidates) {
        if (is_hard(nt, hard_sorted, u)) {
            hard_by_degree[word_degree(u, rank)].push_back(u);
            hard_sorted.insert(
                std::upper_bound(hard_sorted.begin(), hard_sorted.end(), u, WordLess{}), u);
        }
    }

    RootSystem rs;
    rs.bound = bound;
    std::vector<Weight> degrees;
    for (const auto& [deg, words] : hard_by_degree) degrees.push_back(deg);
    std::sort(degrees.begin(), degrees.end(), graded_less);
    for (const Weight& deg : degrees) {
        RootDatum d;
        d.root = deg;
        d.hard_words = hard_by_degree[deg];
        d.multiplicity = static_cast<unsigned>(d.hard_words.size());
        d.height = char_order(nt.bichar().chi(deg, deg));
        rs.roots.push_back(std::move(d));
    }

    rs.complete_below_bound = true;
    for (const auto& r : rs.roots)
        for (size_t i = 0; i < rank; ++i)
            if (r.root[i] == bound[i]) rs.complete_below_bound = false;

    if (rs.complete_below_bound)
        for (const auto& r : rs.roots)
            if (r.multiplicity != 1)
                throw ConsistencyError("finite root system with multiplicity > 1 at " +
                                       r.root.to_string());
    return rs;
}

std::optional<Weight> hilbert_cross_check(NicholsTable& nt, const RootSystem& rs, const Weight& bound) {
    std::vector<Weight> degrees = weights_below(bound);
    std::map<Weight, unsigned long> counts;
    for (const Weight& d : degrees) counts[d] = 0;
    counts[Weight::zero(bound.rank())] = 1;

    for (const auto& r : rs.roots) {
        for (unsigned copy = 0; copy < r.multiplicity; ++copy) {
            std::map<Weight, unsigned long> next;
            for (const Weight& d : degrees) {
                unsigned long total = 0;
                Weight shift = Weight::zero(bound.rank());
                for (unsigned n = 0;; ++n) {
                    if (r.height != 0 && n >= r.height) break;
                    Weight rem = d - shift;
                    if (!rem.nonnegative()) break;
                    total += counts[rem];
                    shift += r.root;
                }
                next[d] = total;
            }
            counts = std::move(next);
        }
    }

    for (const Weight& d : degrees)
        if (counts[d] != nt.dim(d)) return d;
    return std::nullopt;
}

bool sieve_is_order_independent(NicholsTable& nt, const RootSystem& rs) {
    std::vector<Word> final_hard;
    for (const auto& r : rs.roots)
        for (const Word& w : r.hard_words) final_hard.push_back(w);
    std::sort(final_hard.begin(), final_hard.end(), WordLess{});

    for (const Word& u : enumerate_standard(rs.bound)) {
        bool claimed = std::binary_search(final_hard.begin(), final_hard.end(), u, WordLess{});
        if (is_hard(nt, final_hard, u) != claimed) return false;
    }
    return true;
}

} // namespace gqg
