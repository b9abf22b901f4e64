#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtasep/chain.hpp"
#include "mtasep/mlq.hpp"

namespace mtasep::verify {

struct Options {
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t cap = kDefaultStateCap;
};

/// Outcome of one exhaustive check suite. `statement` is the identity the
/// suite tests, quoted in reports so a failure names what broke.
struct CheckResult {
    std::string suite;
    std::string statement;
    int nmax = 0;
    std::uint64_t cases = 0;
    bool passed = true;
    std::string counterexample;
    double seconds = 0;
};

/// All strict types with total n, i.e. compositions of n into positive
/// parts.
std::vector<TypeVector> strict_types(int n);

const std::vector<std::string>& suite_names();  // excludes "all"
bool is_suite(const std::string& name);

/// Runs one named suite exhaustively over all strict types with total
/// <= nmax (for the binomial suite, over all argument triples below
/// nmax). Throws on unknown names.
CheckResult run_suite(const std::string& name, int nmax, const Options& opts = {});

/// Every suite at its given nmax.
std::vector<CheckResult> run_all(int nmax, const Options& opts = {});

}  // namespace mtasep::verify
