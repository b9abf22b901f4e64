#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mtasep/word.hpp"

namespace mtasep {

/// Default ceiling on the number of states of an exact solve (7 distinct
/// letters).
inline constexpr std::uint64_t kDefaultStateCap = 5040;

/// Which letter's class selects the jump rate in the inhomogeneous chain:
/// the smaller letter that moves left (jumper) or the larger one it
/// overtakes (blocker). Rates are x_1..x_{r-1}; the blocker convention
/// reads x_{l-1} for the larger letter l.
enum class RateConvention { JumperClass, BlockerClass };

constexpr const char* to_string(RateConvention c) {
    return c == RateConvention::JumperClass ? "jumper" : "blocker";
}

/// A chain instance: the type plus, optionally, per-class jump rates.
/// Without rates every admissible swap has probability exactly 1/n.
struct ChainSpec {
    TypeVector m;
    std::optional<std::vector<mpq_class>> rates;  // x_1..x_{r-1}, positive
    RateConvention convention = RateConvention::JumperClass;

    bool homogeneous() const { return !rates.has_value(); }
    void validate() const;
};

/// A position whose letter is strictly smaller than its cyclic left
/// neighbour; the swap of the two letters is one chain transition.
struct CyclicDescent {
    int pos;      // 0-based position of the smaller letter
    int smaller;  // the letter that jumps left
    int larger;   // the letter it overtakes
    Word target;  // the word after the swap
};

std::vector<CyclicDescent> cyclic_descents(const Word& w);

/// One step of the homogeneous chain out of w: each cyclic descent yields
/// its swapped word with probability 1/n; the remainder loops.
struct TransitionList {
    std::vector<std::pair<Word, mpq_class>> moves;  // per-descent, may repeat targets
    mpq_class loop;
};

TransitionList transitions(const Word& w);

/// Row-stochastic transition matrix over all words of type m in
/// lexicographic order. Parallel transitions to one target aggregate; the
/// diagonal carries the loop probability. Inhomogeneous rates enter as
/// uniformized probabilities x_c / (n * max x).
struct TransitionMatrix {
    std::vector<Word> states;
    std::vector<std::vector<std::pair<int, mpq_class>>> rows;  // sorted by column

    mpq_class at(int row, int col) const;
};

TransitionMatrix transition_matrix(const ChainSpec& spec,
                                   std::uint64_t cap = kDefaultStateCap);

/// Exact stationary distribution: word -> rational probability, values
/// summing to exactly 1, support all words of the type.
struct StationaryTable {
    TypeVector type;
    std::map<Word, mpq_class> entries;

    const mpq_class& at(const Word& w) const;
    /// Least common denominator of the entries; the natural normalizer Z
    /// for serialized p/q forms.
    mpz_class common_denominator() const;
};

/// Solves pi P = pi, sum pi = 1 by Gaussian elimination on the transposed
/// fixed-point system with the normalization row appended, in exact
/// integer arithmetic (pivots chosen among nonzero candidates; magnitude
/// is meaningless here). Never normalizes a non-unique solution: rank
/// defects raise SolveError.
StationaryTable stationary_exact(const ChainSpec& spec,
                                 std::uint64_t cap = kDefaultStateCap);

/// Stationary table assembled from bracket counts, entries [u]/Z_m.
StationaryTable stationary_from_counts(const TypeVector& m,
                                       const std::map<Word, std::uint64_t>& counts);

/// Exact total variation distance between two tables on the same support.
mpq_class tv_distance(const StationaryTable& a, const StationaryTable& b);

}  // namespace mtasep
