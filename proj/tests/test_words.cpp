#include <doctest.h>

#include <map>
#include <random>

#include "gqg/free_algebra.hpp"
#include "helpers.hpp"

using namespace gqg;

namespace {

Word rand_word(std::mt19937_64& rng, size_t maxlen, unsigned letters) {
    std::uniform_int_distribution<size_t> len(0, maxlen);
    std::uniform_int_distribution<unsigned> let(1, letters);
    Word w;
    size_t n = len(rng);
    for (size_t i = 0; i < n; ++i) w.push_back(static_cast<char>('0' + let(rng)));
    return w;
}

} // namespace

TEST_SUITE("words") {

TEST_CASE("order: smaller letter wins, prefixes are greater") {
    CHECK(word_compare("1", "2") == WordOrder::greater);
    CHECK(word_compare("1", "12") == WordOrder::greater);
    CHECK(word_compare("12", "21") == WordOrder::greater);
    CHECK(word_compare("", "1") == WordOrder::greater);
    CHECK(word_compare("12", "12") == WordOrder::equal);
    CHECK(word_compare("2", "1") == WordOrder::less);
}

TEST_CASE("order is total and transitive") {
    std::mt19937_64 rng(53);
    std::vector<Word> sample;
    for (int i = 0; i < 40; ++i) sample.push_back(rand_word(rng, 5, 3));
    for (const Word& u : sample) {
        for (const Word& v : sample) {
            WordOrder uv = word_compare(u, v), vu = word_compare(v, u);
            if (u == v) {
                CHECK(uv == WordOrder::equal);
            } else {
                CHECK(uv != WordOrder::equal);
                CHECK((uv == WordOrder::less) == (vu == WordOrder::greater));
            }
            for (const Word& w : sample) {
                if (word_less(u, v) && word_less(v, w)) CHECK(word_less(u, w));
            }
        }
    }
}

TEST_CASE("standard words") {
    CHECK(is_standard(""));
    CHECK(is_standard("1"));
    CHECK(is_standard("12"));
    CHECK_FALSE(is_standard("11"));
    CHECK(is_standard("112"));
    CHECK_FALSE(is_standard("21"));
    CHECK_FALSE(is_standard("1212"));
    CHECK(is_standard("1122"));
}

TEST_CASE("shirshov factorization") {
    CHECK(shirshov_factorize("12") == std::pair<Word, Word>{"1", "2"});
    CHECK(shirshov_factorize("112") == std::pair<Word, Word>{"1", "12"});
    CHECK(shirshov_factorize("122") == std::pair<Word, Word>{"12", "2"});
    CHECK_THROWS_AS(shirshov_factorize("1"), Error);
    CHECK_THROWS_AS(shirshov_factorize("21"), Error);
}

TEST_CASE("factors of standard words are standard with greater head") {
    for (const Word& u : enumerate_standard(Weight({4, 3}))) {
        if (u.size() < 2) continue;
        auto [head, tail] = shirshov_factorize(u);
        CHECK(head + tail == u);
        CHECK(is_standard(head));
        CHECK(is_standard(tail));
        CHECK(word_greater(head, tail));
    }
}

TEST_CASE("enumerate standard words") {
    CHECK(enumerate_standard(Weight({3})) == std::vector<Word>{"1"});
    CHECK(enumerate_standard(Weight({1, 1})) == std::vector<Word>{"1", "12", "2"});
    CHECK(enumerate_standard(Weight({0, 0})).empty());
    CHECK_THROWS_AS(enumerate_standard(Weight({-1, 1})), Error);
}

TEST_CASE("unique nondecreasing factorization into standard words") {
    // every word of the degree arises from exactly one multiset of standard
    // words, concatenated in increasing word order
    Weight bound({3, 3});
    std::vector<Word> standard = enumerate_standard(bound);
    std::sort(standard.begin(), standard.end(), WordLess{});

    std::map<Weight, std::map<Word, unsigned>> factorizations;
    // enumerate multisets by nondecreasing sequences over `standard`
    struct Rec {
        const std::vector<Word>& standard;
        const Weight& bound;
        std::map<Weight, std::map<Word, unsigned>>& out;
        void run(size_t pos, const Word& acc, const Weight& deg) {
            if (!acc.empty()) ++out[deg][acc];
            for (size_t p = pos; p < standard.size(); ++p) {
                Weight d = deg + word_degree(standard[p], 2);
                if (!d.dominated_by(bound)) continue;
                run(p, acc + standard[p], d);
            }
        }
    };
    Rec rec{standard, bound, factorizations};
    rec.run(0, Word(), Weight::zero(2));

    for (const Weight& deg : weights_below(bound)) {
        if (deg.is_zero()) continue;
        // direct enumeration of all words of this degree
        std::vector<Word> all;
        std::vector<long> left = deg.coords();
        Word cur;
        struct Gen {
            std::vector<Word>& all;
            void run(std::vector<long>& left, Word& cur) {
                bool done = true;
                for (size_t i = 0; i < left.size(); ++i) {
                    if (left[i] > 0) {
                        done = false;
                        --left[i];
                        cur.push_back(static_cast<char>('1' + i));
                        run(left, cur);
                        cur.pop_back();
                        ++left[i];
                    }
                }
                if (done) all.push_back(cur);
            }
        };
        Gen gen{all};
        gen.run(left, cur);

        const auto& got = factorizations[deg];
        CHECK(got.size() == all.size());
        for (const auto& [w, count] : got) CHECK(count == 1);
        for (const Word& w : all) CHECK(got.count(w) == 1);
    }
}

} // TEST_SUITE
