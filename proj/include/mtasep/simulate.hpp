#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

#include "mtasep/chain.hpp"
#include "mtasep/word.hpp"

namespace mtasep {

/// Identifier of the generator below, recorded in every simulation report
/// so runs can be replayed bit-for-bit by any implementation.
inline constexpr const char* kRngAlgorithm = "splitmix64";

/// The i-th output (i = 1, 2, ...) of the splitmix64 stream with the
/// given seed: mix64(seed + i * 0x9E3779B97F4A7C15). Stateless, so any
/// counter can be evaluated independently.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter);

/// floor(u * n / 2^64): the fixed 64-bit multiply-high reduction used to
/// turn one generator output into a position in [0, n).
int reduce_to_position(std::uint64_t u, int n);

struct SimulationResult {
    Word start;
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    std::string rng = kRngAlgorithm;
    std::string convention;                 // empty for the homogeneous chain
    std::map<Word, std::uint64_t> counts;   // visits, summing to steps + 1

    /// Exact total variation distance between the empirical distribution
    /// and a reference table.
    mpq_class tv_against(const StationaryTable& exact) const;

    /// Empirical frequency of one word as an exact rational.
    mpq_class frequency(const Word& w) const;
};

/// Runs the chain for `steps` single-site updates from `start`, counting
/// every visited state including the initial one. Each step draws one
/// position (homogeneous) or a position plus an acceptance variate
/// (inhomogeneous thinning by x_c / max x). Deterministic in
/// (spec, start, steps, seed).
SimulationResult simulate(const ChainSpec& spec, const Word& start,
                          std::uint64_t steps, std::uint64_t seed);

}  // namespace mtasep
