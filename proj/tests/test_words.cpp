#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "mtasep/formulas.hpp"
#include "mtasep/numeric.hpp"
#include "mtasep/word.hpp"

using namespace mtasep;

TEST_CASE("word parsing and serialization") {
    CHECK(Word::parse("1423").letters() == std::vector<int>{1, 4, 2, 3});
    CHECK(Word::parse("10,2,3").letters() == std::vector<int>{10, 2, 3});
    CHECK(Word::parse("1423").str() == "1423");
    CHECK(Word::parse("10,2,3").str() == "10,2,3");
    CHECK_THROWS_AS(Word::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("1a3"), std::invalid_argument);
}

TEST_CASE("type_of") {
    CHECK(type_of(Word::parse("1423")).counts() == std::vector<int>{1, 1, 1, 1});
    CHECK(type_of(Word::parse("1233")).counts() == std::vector<int>{1, 1, 2});
    CHECK(type_of(Word::parse("111")).counts() == std::vector<int>{3});
    CHECK(type_of(Word::parse("44")).counts() == std::vector<int>{0, 0, 0, 2});
    CHECK_FALSE(type_of(Word::parse("44")).valid());
}

TEST_CASE("sorted_word") {
    CHECK(sorted_word(TypeVector({1, 1, 1, 1})) == Word::parse("1234"));
    CHECK(sorted_word(TypeVector({2, 1, 3})) == Word::parse("112333"));
    CHECK(sorted_word(TypeVector({4})) == Word::parse("1111"));
    CHECK_THROWS_AS(sorted_word(TypeVector({1, 0, 2})), std::invalid_argument);
}

TEST_CASE("type vector modes") {
    TypeVector relaxed({1, 2, 0}, TypeVector::Mode::Relaxed);
    CHECK(relaxed.valid());
    CHECK_FALSE(TypeVector({1, 2, 0}).valid());
    CHECK_FALSE(TypeVector({1, 0, 2}, TypeVector::Mode::Relaxed).valid());
    CHECK(TypeVector::parse("1,1,2").counts() == std::vector<int>{1, 1, 2});
    CHECK(TypeVector({1, 1, 2}).str() == "1,1,2");
    CHECK(TypeVector({1, 1, 2}).total() == 4);
    CHECK(TypeVector({1, 1, 2}).cumulative(2) == 2);
}

TEST_CASE("cyclic shifts") {
    auto shifts = cyclic_shifts(Word::parse("1423"));
    std::set<Word> got(shifts.begin(), shifts.end());
    std::set<Word> want{Word::parse("1423"), Word::parse("4231"),
                        Word::parse("2314"), Word::parse("3142")};
    CHECK(got == want);
    CHECK(shifts.front() == Word::parse("1423"));

    auto two = cyclic_shifts(Word::parse("11"));
    CHECK(std::set<Word>(two.begin(), two.end()) == std::set<Word>{Word::parse("11")});

    auto three = cyclic_shifts(Word::parse("123"));
    std::set<Word> want3{Word::parse("123"), Word::parse("312"), Word::parse("231")};
    CHECK(std::set<Word>(three.begin(), three.end()) == want3);

    CHECK(canonical_rotation(Word::parse("4231")) == Word::parse("1423"));
}

TEST_CASE("merge_top") {
    CHECK(merge_top(Word::parse("1423")) == Word::parse("1323"));
    CHECK(merge_top(Word::parse("1233")) == Word::parse("1222"));
    CHECK_THROWS_AS(merge_top(Word::parse("111")), std::invalid_argument);
    CHECK_THROWS_AS(merge_top(Word::parse("44")), std::invalid_argument);
    CHECK(merge_top(Word::parse("44"), TypeVector::Mode::Relaxed) ==
          Word::parse("33"));
}

TEST_CASE("reverse_complement examples") {
    CHECK(reverse_complement(Word::parse("1423"), 4) == Word::parse("2314"));
    CHECK(reverse_complement(Word::parse("1234"), 4) == Word::parse("1234"));
    CHECK(reverse_complement(Word::parse("12"), 2) == Word::parse("12"));
    CHECK_THROWS_AS(reverse_complement(Word::parse("15"), 4), std::invalid_argument);
}

TEST_CASE("reverse_complement is an involution for all words, r <= 6, n <= 6") {
    for (int r = 1; r <= 6; ++r) {
        for (int n = 1; n <= 6; ++n) {
            // all r^n words over {1..r}
            std::vector<int> letters(n, 1);
            while (true) {
                Word w(letters);
                CHECK(reverse_complement(reverse_complement(w, r), r) == w);
                int i = n - 1;
                while (i >= 0 && letters[i] == r) letters[i--] = 1;
                if (i < 0) break;
                letters[i]++;
            }
        }
    }
}

TEST_CASE("type_of inverts sorted_word for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        std::function<void(int, std::vector<int>&)> rec = [&](int remaining,
                                                              std::vector<int>& acc) {
            if (remaining == 0) {
                TypeVector m(acc);
                CHECK(type_of(sorted_word(m)).counts() == m.counts());
                return;
            }
            for (int part = 1; part <= remaining; ++part) {
                acc.push_back(part);
                rec(remaining - part, acc);
                acc.pop_back();
            }
        };
        std::vector<int> acc;
        rec(n, acc);
    }
}

TEST_CASE("suffix enumeration") {
    auto e31 = enumerate_suffixes(3, 1);
    CHECK(e31.size() == 3);
    std::set<Word> got(e31.begin(), e31.end());
    std::set<Word> want{Word::parse("211"), Word::parse("121"), Word::parse("112")};
    CHECK(got == want);

    auto e20 = enumerate_suffixes(2, 0);
    CHECK(e20 == std::vector<Word>{Word::parse("11")});

    CHECK_THROWS_AS(enumerate_suffixes(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_suffixes(3, -1), std::invalid_argument);

    // encoded inside a larger alphabet
    auto e21r5 = enumerate_suffixes(2, 1, 5);
    std::set<Word> got5(e21r5.begin(), e21r5.end());
    CHECK(got5 == std::set<Word>{Word::parse("45"), Word::parse("54")});

    CHECK(sorted_suffix(5, 2) == Word::parse("11122"));
    CHECK(sorted_suffix(5, 2, 4) == Word::parse("33344"));
}

TEST_CASE("collapse_nontrailing") {
    // beta alpha beta beta alpha alpha beta beta beta -> alpha^6 beta^3
    Word v({2, 1, 2, 2, 1, 1, 2, 2, 2});
    auto [f, g] = collapse_nontrailing(v);
    CHECK(f == Word({1, 1, 1, 1, 1, 1, 2, 2, 2}));
    CHECK(g == 3);

    CHECK(collapse_nontrailing(Word::parse("111")) ==
          std::pair<Word, int>(Word::parse("111"), 0));
    CHECK(collapse_nontrailing(Word::parse("222")) ==
          std::pair<Word, int>(Word::parse("222"), 3));
    CHECK_THROWS_AS(collapse_nontrailing(Word::parse("123"), 3),
                    std::invalid_argument);
}

TEST_CASE("collapse properties over all suffixes, length <= 10") {
    for (int len = 1; len <= 10; ++len) {
        for (int b = 0; b <= len; ++b) {
            std::map<int, long> group_sizes;
            for (const Word& v : enumerate_suffixes(len, b)) {
                auto [f, g] = collapse_nontrailing(v);
                CHECK(f == sorted_suffix(len, g));
                CHECK(collapse_nontrailing(f) == std::pair<Word, int>(f, g));
                group_sizes[g]++;
            }
            if (b == len) {
                // all-beta corner: E_len = {beta^len}, g = len; the group
                // count formula is only claimed for b <= len - 1
                CHECK(group_sizes == std::map<int, long>{{len, 1}});
                continue;
            }
            // |{v in E_b : g(v)=k}| = C(len-k-1, b-k)
            for (int k = 0; k <= b; ++k) {
                mpz_class want = binomial(len - k - 1, b - k);
                mpz_class got(group_sizes.count(k) ? group_sizes[k] : 0);
                CHECK(got == want);
            }
        }
    }
}
