#include "mtasep/io.hpp"

#include <bit>
#include <sstream>

#include "mtasep/numeric.hpp"

namespace mtasep::io {

using nlohmann::json;

namespace {

// Entries rewritten over the table's least common denominator, matching
// the bracket-over-Z form: 3/32 prints as 9/96 when Z = 96.
std::string over_common_denominator(const mpq_class& p, const mpz_class& z) {
    mpz_class num = p.get_num() * (z / p.get_den());
    return num.get_str() + "/" + z.get_str();
}

}  // namespace

json stationary_to_json(const StationaryTable& table) {
    mpz_class z = table.common_denominator();
    json entries = json::object();
    for (const auto& [w, p] : table.entries)
        entries[w.str()] = over_common_denominator(p, z);
    return json{{"schema", kSchema},
                {"type", table.type.str()},
                {"n", table.type.total()},
                {"Z", z.get_str()},
                {"entries", entries}};
}

std::string stationary_to_csv(const StationaryTable& table) {
    mpz_class z = table.common_denominator();
    std::ostringstream out;
    out << "word,probability_num,probability_den\n";
    for (const auto& [w, p] : table.entries)
        out << w.str() << "," << (p.get_num() * (z / p.get_den())).get_str() << ","
            << z.get_str() << "\n";
    return out.str();
}

std::string stationary_to_ascii(const StationaryTable& table) {
    mpz_class z = table.common_denominator();
    std::ostringstream out;
    out << "type " << table.type.str() << "  (Z = " << z.get_str() << ")\n";
    for (const auto& [w, p] : table.entries)
        out << "  pi(" << w.str() << ") = " << over_common_denominator(p, z)
            << "\n";
    return out.str();
}

json counts_to_json(const TypeVector& m,
                    const std::map<Word, std::uint64_t>& counts) {
    json entries = json::object();
    mpz_class total = 0;
    for (const auto& [w, c] : counts) {
        entries[w.str()] = c;
        total += static_cast<unsigned long>(c);
    }
    return json{{"schema", kSchema},
                {"type", m.str()},
                {"n", m.total()},
                {"Z", total.get_str()},
                {"brackets", entries}};
}

std::string counts_to_csv(const std::map<Word, std::uint64_t>& counts) {
    std::ostringstream out;
    out << "word,bracket\n";
    for (const auto& [w, c] : counts) out << w.str() << "," << c << "\n";
    return out.str();
}

std::string counts_to_ascii(const std::map<Word, std::uint64_t>& counts) {
    std::ostringstream out;
    for (const auto& [w, c] : counts) out << "[" << w.str() << "] = " << c << "\n";
    return out.str();
}

json mlq_to_json(const LabelledMlq& q) {
    json rows = json::array();
    json labels = json::array();
    for (int i = 0; i < q.base.r; ++i) {
        json row_cols = json::array();
        json row_labels = json::array();
        for (int col = 1; col <= q.base.n; ++col)
            if (q.base.box_at(i + 1, col)) {
                row_cols.push_back(col);
                row_labels.push_back(q.labels[i][col - 1]);
            }
        rows.push_back(row_cols);
        labels.push_back(row_labels);
    }
    return json{{"schema", kSchema},
                {"n", q.base.n},
                {"r", q.base.r},
                {"rows", rows},
                {"labels", labels}};
}

std::string mlq_to_ascii(const LabelledMlq& q) {
    int max_label = 1;
    for (const auto& row : q.labels)
        for (int l : row) max_label = std::max(max_label, l);
    std::size_t width = std::to_string(max_label).size() + 2;
    std::ostringstream out;
    for (int i = 0; i < q.base.r; ++i) {
        for (int col = 1; col <= q.base.n; ++col) {
            std::string cell = q.base.box_at(i + 1, col)
                                   ? "[" + std::to_string(q.labels[i][col - 1]) + "]"
                                   : ".";
            cell.resize(width, ' ');
            out << cell << (col == q.base.n ? "" : " ");
        }
        out << "\n";
    }
    return out.str();
}

json simulation_to_json(const SimulationResult& sim) {
    json counts = json::object();
    for (const auto& [w, c] : sim.counts) counts[w.str()] = c;
    json out{{"schema", kSchema},
             {"start", sim.start.str()},
             {"steps", sim.steps},
             {"seed", sim.seed},
             {"rng", sim.rng},
             {"visits", sim.steps + 1},
             {"counts", counts}};
    if (!sim.convention.empty()) out["convention"] = sim.convention;
    return out;
}

json check_to_json(const verify::CheckResult& c) {
    json out{{"suite", c.suite},
             {"statement", c.statement},
             {"nmax", c.nmax},
             {"cases", c.cases},
             {"passed", c.passed},
             {"seconds", c.seconds}};
    if (!c.passed) out["counterexample"] = c.counterexample;
    return out;
}

}  // namespace mtasep::io
