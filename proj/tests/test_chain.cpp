#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "mtasep/chain.hpp"
#include "mtasep/errors.hpp"
#include "mtasep/mlq.hpp"
#include "mtasep/verify.hpp"
#include "mtasep/word.hpp"

using namespace mtasep;

namespace {

std::map<Word, mpq_class> move_map(const TransitionList& t) {
    std::map<Word, mpq_class> out;
    for (const auto& [w, p] : t.moves) out[w] += p;
    return out;
}

}  // namespace

TEST_CASE("transitions of 1234") {
    TransitionList t = transitions(Word::parse("1234"));
    CHECK(move_map(t) == std::map<Word, mpq_class>{{Word::parse("4231"),
                                                    mpq_class(1, 4)}});
    CHECK(t.loop == mpq_class(3, 4));
}

TEST_CASE("transitions of 1423") {
    TransitionList t = transitions(Word::parse("1423"));
    std::map<Word, mpq_class> want{{Word::parse("3421"), mpq_class(1, 4)},
                                   {Word::parse("1243"), mpq_class(1, 4)}};
    CHECK(move_map(t) == want);
    CHECK(t.loop == mpq_class(1, 2));
}

TEST_CASE("equal letters never swap") {
    TransitionList t = transitions(Word::parse("11"));
    CHECK(t.moves.empty());
    CHECK(t.loop == 1);
}

TEST_CASE("outgoing probabilities sum to one for every word, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const TypeVector& m : verify::strict_types(n))
            for (const Word& w : words_of_type(m)) {
                TransitionList t = transitions(w);
                mpq_class total = t.loop;
                for (const auto& [v, p] : t.moves) {
                    CHECK(p == mpq_class(1, n));
                    total += p;
                }
                CHECK(total == 1);
                CHECK(t.loop >= 0);
            }
}

TEST_CASE("transition matrix for (1,1)") {
    TransitionMatrix P = transition_matrix({TypeVector({1, 1})});
    REQUIRE(P.states == std::vector<Word>{Word::parse("12"), Word::parse("21")});
    CHECK(P.at(0, 0) == mpq_class(1, 2));
    CHECK(P.at(0, 1) == mpq_class(1, 2));
    CHECK(P.at(1, 0) == mpq_class(1, 2));
    CHECK(P.at(1, 1) == mpq_class(1, 2));
}

TEST_CASE("transition matrix for (2) and (1,1,1)") {
    TransitionMatrix single = transition_matrix({TypeVector({2})});
    REQUIRE(single.states.size() == 1);
    CHECK(single.at(0, 0) == 1);

    TransitionMatrix P = transition_matrix({TypeVector({1, 1, 1})});
    CHECK(P.states.size() == 6);
    for (std::size_t i = 0; i < P.states.size(); ++i) {
        mpq_class row_sum = 0;
        for (const auto& [j, p] : P.rows[i]) {
            CHECK(p > 0);
            row_sum += p;
        }
        CHECK(row_sum == 1);
    }
}

TEST_CASE("rows are stochastic for every type, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const TypeVector& m : verify::strict_types(n)) {
            TransitionMatrix P = transition_matrix({m});
            for (const auto& row : P.rows) {
                mpq_class s = 0;
                for (const auto& [j, p] : row) s += p;
                CHECK(s == 1);
            }
        }
}

TEST_CASE("state cap is enforced") {
    CHECK_THROWS_AS(transition_matrix({TypeVector({1, 1, 1})}, 5), CapError);
    CHECK_THROWS_AS(stationary_exact({TypeVector({1, 1, 1, 1})}, 23), CapError);
}

TEST_CASE("stationary distribution of the two-state chain") {
    StationaryTable pi = stationary_exact({TypeVector({1, 1})});
    CHECK(pi.at(Word::parse("12")) == mpq_class(1, 2));
    CHECK(pi.at(Word::parse("21")) == mpq_class(1, 2));
}

TEST_CASE("stationary values of type (1,1,1,1)") {
    StationaryTable pi = stationary_exact({TypeVector({1, 1, 1, 1})});
    CHECK(pi.at(Word::parse("1234")) == mpq_class(9, 96));
    CHECK(pi.at(Word::parse("1432")) == mpq_class(1, 96));
    CHECK(pi.common_denominator() == 96);
    mpq_class total = 0;
    for (const auto& [w, p] : pi.entries) {
        CHECK(p > 0);
        total += p;
    }
    CHECK(total == 1);
    CHECK(pi.entries.size() == 24);
}

TEST_CASE("balance equation holds verbatim at every state, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const TypeVector& m : verify::strict_types(n)) {
            StationaryTable pi = stationary_exact({m});
            std::map<Word, mpq_class> inflow;
            std::map<Word, int> outdegree;
            for (const Word& v : words_of_type(m)) {
                auto descents = cyclic_descents(v);
                outdegree[v] = static_cast<int>(descents.size());
                for (const CyclicDescent& d : descents) inflow[d.target] += pi.at(v);
            }
            for (const Word& u : words_of_type(m))
                CHECK(outdegree[u] * pi.at(u) == inflow[u]);
        }
}

TEST_CASE("balance equation holds verbatim at every state, n = 6") {
    for (const TypeVector& m : verify::strict_types(6)) {
        StationaryTable pi = stationary_exact({m});
        std::map<Word, mpq_class> inflow;
        for (const Word& v : words_of_type(m))
            for (const CyclicDescent& d : cyclic_descents(v)) inflow[d.target] += pi.at(v);
        for (const Word& u : words_of_type(m)) {
            mpq_class k(static_cast<long>(cyclic_descents(u).size()));
            CHECK(k * pi.at(u) == inflow[u]);
        }
    }
}

TEST_CASE("stationary agrees with bracket counts, n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const TypeVector& m : verify::strict_types(n)) {
            StationaryTable exact = stationary_exact({m});
            StationaryTable counted = stationary_from_counts(m, count_all(m));
            CHECK(exact.entries == counted.entries);
        }
}

TEST_CASE("pi is constant on cyclic classes, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const TypeVector& m : verify::strict_types(n)) {
            StationaryTable pi = stationary_exact({m});
            for (const auto& [w, p] : pi.entries)
                for (const Word& shifted : cyclic_shifts(w))
                    CHECK(pi.at(shifted) == p);
        }
}

TEST_CASE("inhomogeneous chain with jumper rates, exact solve") {
    // type (1,1,1), x = (1,2): hand-solved stationary law gives
    // pi(123) = 1/4 under the jumper convention, 1/5 under blocker.
    ChainSpec jumper{TypeVector({1, 1, 1}),
                     std::vector<mpq_class>{1, 2},
                     RateConvention::JumperClass};
    StationaryTable pj = stationary_exact(jumper);
    CHECK(pj.at(Word::parse("123")) == mpq_class(1, 4));
    CHECK(pj.at(Word::parse("132")) == mpq_class(1, 12));
    CHECK(pj.at(Word::parse("231")) == mpq_class(1, 4));

    ChainSpec blocker = jumper;
    blocker.convention = RateConvention::BlockerClass;
    StationaryTable pb = stationary_exact(blocker);
    CHECK(pb.at(Word::parse("123")) == mpq_class(1, 5));
}

TEST_CASE("rate validation") {
    ChainSpec bad{TypeVector({1, 1, 1}), std::vector<mpq_class>{1}, {}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    ChainSpec neg{TypeVector({1, 1}), std::vector<mpq_class>{-1}, {}};
    CHECK_THROWS_AS(neg.validate(), std::invalid_argument);
}

TEST_CASE("tv distance") {
    StationaryTable a = stationary_exact({TypeVector({1, 1})});
    StationaryTable b;
    b.type = a.type;
    b.entries[Word::parse("12")] = mpq_class(3, 4);
    b.entries[Word::parse("21")] = mpq_class(1, 4);
    CHECK(tv_distance(a, b) == mpq_class(1, 4));
    CHECK(tv_distance(a, a) == 0);
}
