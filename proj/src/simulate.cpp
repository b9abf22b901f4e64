#include "mtasep/simulate.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtasep {

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + counter * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int reduce_to_position(std::uint64_t u, int n) {
    return static_cast<int>((static_cast<unsigned __int128>(u) * n) >> 64);
}

mpq_class SimulationResult::tv_against(const StationaryTable& exact) const {
    mpz_class total(static_cast<unsigned long>(steps + 1));
    mpq_class acc = 0;
    for (const auto& [w, p] : exact.entries) {
        auto it = counts.find(w);
        mpz_class c = it == counts.end()
                          ? mpz_class(0)
                          : mpz_class(static_cast<unsigned long>(it->second));
        mpq_class emp(c, total);
        emp.canonicalize();
        acc += abs(emp - p);
    }
    for (const auto& [w, c] : counts)
        if (!exact.entries.count(w)) {
            mpq_class emp(mpz_class(static_cast<unsigned long>(c)), total);
            emp.canonicalize();
            acc += emp;
        }
    return acc / 2;
}

mpq_class SimulationResult::frequency(const Word& w) const {
    auto it = counts.find(w);
    mpz_class c = it == counts.end()
                      ? mpz_class(0)
                      : mpz_class(static_cast<unsigned long>(it->second));
    mpq_class f(c, mpz_class(static_cast<unsigned long>(steps + 1)));
    f.canonicalize();
    return f;
}

SimulationResult simulate(const ChainSpec& spec, const Word& start,
                          std::uint64_t steps, std::uint64_t seed) {
    spec.validate();
    if (!(type_of(start) == spec.m))
        throw std::invalid_argument("simulate: start word " + start.str() +
                                    " is not of type " + spec.m.str());
    int n = start.size();
    bool inhom = spec.rates.has_value();

    mpq_class max_rate = 1;
    if (inhom) max_rate = *std::max_element(spec.rates->begin(), spec.rates->end());
    // Acceptance test u/2^64 < x_c/max: u * den < num << 64, precomputed
    // per class as exact integer thresholds.
    std::vector<mpz_class> accept_num, accept_den;
    if (inhom) {
        for (const mpq_class& x : *spec.rates) {
            mpq_class ratio = x / max_rate;
            mpz_class num = ratio.get_num();
            num <<= 64;
            accept_num.push_back(num);
            accept_den.push_back(ratio.get_den());
        }
    }

    SimulationResult out;
    out.start = start;
    out.steps = steps;
    out.seed = seed;
    if (inhom) out.convention = to_string(spec.convention);

    std::vector<int> word = start.letters();
    std::map<std::vector<int>, std::uint64_t> counts;
    counts[word]++;

    std::uint64_t counter = 0;
    mpz_class u2z;
    for (std::uint64_t t = 0; t < steps; ++t) {
        int pos = reduce_to_position(splitmix64_at(seed, ++counter), n);
        std::uint64_t u2 = 0;
        if (inhom) u2 = splitmix64_at(seed, ++counter);
        int left = (pos + n - 1) % n;
        if (word[pos] < word[left]) {
            bool accept = true;
            if (inhom) {
                int cls = spec.convention == RateConvention::JumperClass
                              ? word[pos]
                              : word[left] - 1;
                u2z = static_cast<unsigned long>(u2);
                accept = u2z * accept_den[cls - 1] < accept_num[cls - 1];
            }
            if (accept) std::swap(word[pos], word[left]);
        }
        counts[word]++;
    }
    for (auto& [letters, c] : counts) out.counts[Word(letters)] = c;
    return out;
}

}  // namespace mtasep
