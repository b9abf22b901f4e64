#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mtasep/formulas.hpp"
#include "mtasep/mlq.hpp"
#include "mtasep/numeric.hpp"
#include "mtasep/verify.hpp"
#include "mtasep/word.hpp"

using namespace mtasep;

TEST_CASE("binomial zero convention") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(3, 4) == 0);
}

TEST_CASE("sorted bracket product") {
    CHECK(sorted_bracket_formula(TypeVector({1, 1, 1, 1})) == 9);
    CHECK(sorted_bracket_formula(TypeVector({1, 1, 2})) == 3);
    CHECK(sorted_bracket_formula(TypeVector({5})) == 1);
    CHECK(sorted_bracket_formula(TypeVector({2, 2})) == 1);
    // five distinct letters, against the enumeration
    CHECK(sorted_bracket_formula(TypeVector({1, 1, 1, 1, 1})) == 96);
    CHECK(bracket(Word::parse("12345")) == 96);
}

TEST_CASE("binomial identity examples") {
    auto [l1, r1] = binomial_identity_sides(4, 1, 2);
    CHECK(l1 == 4);
    CHECK(r1 == 4);
    auto [l2, r2] = binomial_identity_sides(9, 0, 3);
    CHECK(l2 == 1);
    CHECK(r2 == 1);
    auto [l3, r3] = binomial_identity_sides(12, 5, 3);
    CHECK(l3 == r3);
}

TEST_CASE("binomial identity exhaustively, s + b < n <= 14") {
    for (long n = 0; n <= 14; ++n)
        for (long s = 0; s < n; ++s)
            for (long b = 0; s + b < n; ++b) {
                auto [left, right] = binomial_identity_sides(n, b, s);
                CHECK(left == right);
            }
}

TEST_CASE("scaled bracket prediction") {
    CHECK(scaled_bracket_prediction(3, 2, 1) == 9);
    CHECK(scaled_bracket_prediction(17, 3, 0) == 17);
    CHECK(scaled_bracket_prediction(1, 1, 2) == 3);
}

TEST_CASE("bracket identities around the (1,1,1,1) table") {
    std::uint64_t b1234 = bracket(Word::parse("1234"));
    std::uint64_t b1243 = bracket(Word::parse("1243"));
    std::uint64_t b1233 = bracket(Word::parse("1233"));
    CHECK(mpz_class(static_cast<unsigned long>(b1234)) ==
          scaled_bracket_prediction(mpz_class(static_cast<unsigned long>(b1233)),
                                    2, 1));
    CHECK(b1234 + b1243 == 4 * b1233);
    CHECK(b1243 == b1233);
    // and the r = 3 reduction: [1233] = C(1+2,1) [1222]
    CHECK(bracket(Word::parse("1222")) == 1);
    CHECK(b1233 == 3 * bracket(Word::parse("1222")));
}

TEST_CASE("chained scaling reproduces the product, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const TypeVector& m : verify::strict_types(n))
            CHECK(chained_scaling_bracket(m) == sorted_bracket_formula(m));
}

TEST_CASE("compositions") {
    CHECK(compositions(1, 2) ==
          std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    CHECK(compositions(0, 3) == std::vector<std::vector<int>>{{0, 0, 0}});
    CHECK(compositions(3, 2).size() == 4);
    CHECK(compositions(0, 0) == std::vector<std::vector<int>>{{}});
    CHECK_THROWS_AS(compositions(2, 0), std::invalid_argument);

    for (int total = 0; total <= 6; ++total)
        for (int parts = 1; parts <= 4; ++parts) {
            auto all = compositions(total, parts);
            CHECK(mpz_class(static_cast<long>(all.size())) ==
                  binomial(total + parts - 1, parts - 1));
            std::set<std::vector<int>> distinct(all.begin(), all.end());
            CHECK(distinct.size() == all.size());
            for (const auto& t : all) {
                int sum = 0;
                for (int v : t) sum += v;
                CHECK(sum == total);
            }
        }
}

TEST_CASE("inhomogeneous values at v = 1") {
    CHECK(inhom_sorted_value(TypeVector({1, 1}), InhomParams::ones(2)) == 1);
    CHECK(inhom_sorted_value(TypeVector({1, 1, 1}), InhomParams::ones(3)) == 2);
    CHECK(inhom_partition_value(TypeVector({1, 1}), InhomParams::ones(2)) == 2);
    CHECK(inhom_partition_value(TypeVector({1, 1, 1}), InhomParams::ones(3)) == 9);
}

TEST_CASE("inhomogeneous values reduce to the homogeneous ones, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const TypeVector& m : verify::strict_types(n)) {
            InhomParams ones = InhomParams::ones(m.rank());
            CHECK(inhom_sorted_value(m, ones) ==
                  mpq_class(sorted_bracket_formula(m)));
            CHECK(inhom_partition_value(m, ones) ==
                  mpq_class(partition_function(m)));
        }
}

TEST_CASE("inhomogeneous values at a generic rate point") {
    // m = (1,1,1), x = (1,2) hence v = (1, 1/2, 1): the factors expand by
    // hand to 3/2 and 6, so the sorted word carries mass 1/4.
    TypeVector m({1, 1, 1});
    InhomParams p = InhomParams::from_rates({mpq_class(1), mpq_class(2)});
    CHECK(p.v == std::vector<mpq_class>{1, mpq_class(1, 2), 1});
    CHECK(inhom_sorted_value(m, p) == mpq_class(3, 2));
    CHECK(inhom_partition_value(m, p) == 6);
    CHECK(inhom_sorted_value(m, p) / inhom_partition_value(m, p) ==
          mpq_class(1, 4));
}

TEST_CASE("inhomogeneous parameter validation") {
    CHECK_THROWS_AS(inhom_sorted_value(TypeVector({1, 1}),
                                       InhomParams{{mpq_class(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(InhomParams::from_rates({mpq_class(0)}), std::invalid_argument);
}
