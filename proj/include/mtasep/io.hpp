#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "mtasep/chain.hpp"
#include "mtasep/mlq.hpp"
#include "mtasep/simulate.hpp"
#include "mtasep/verify.hpp"
#include "mtasep/word.hpp"

namespace mtasep::io {

/// Version tag carried by every JSON document this tool emits.
inline constexpr const char* kSchema = "mtasep/v1";

/// Stationary tables serialize with entries over their least common
/// denominator Z, e.g. {"type":"1,1,1,1","n":4,"Z":"96",
/// "entries":{"1234":"9/96",...}}. Rationals are always "p/q" strings.
nlohmann::json stationary_to_json(const StationaryTable& table);

/// CSV with header word,probability_num,probability_den, numerators over
/// the common denominator.
std::string stationary_to_csv(const StationaryTable& table);

std::string stationary_to_ascii(const StationaryTable& table);

nlohmann::json counts_to_json(const TypeVector& m,
                              const std::map<Word, std::uint64_t>& counts);
std::string counts_to_csv(const std::map<Word, std::uint64_t>& counts);
std::string counts_to_ascii(const std::map<Word, std::uint64_t>& counts);

/// {"n":..,"r":..,"rows":[[boxed columns, 1-based]...],
///  "labels":[[label per box, aligned with rows]...]}
nlohmann::json mlq_to_json(const LabelledMlq& q);

/// One line per row, [l] for a box labelled l, . for an empty cell.
std::string mlq_to_ascii(const LabelledMlq& q);

nlohmann::json simulation_to_json(const SimulationResult& sim);

nlohmann::json check_to_json(const verify::CheckResult& c);

}  // namespace mtasep::io
