#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtasep/chain.hpp"
#include "mtasep/errors.hpp"
#include "mtasep/formulas.hpp"
#include "mtasep/io.hpp"
#include "mtasep/mlq.hpp"
#include "mtasep/numeric.hpp"
#include "mtasep/simulate.hpp"
#include "mtasep/verify.hpp"
#include "mtasep/word.hpp"

using nlohmann::json;
using namespace mtasep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
    std::string format = "ascii";
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t cap = kDefaultStateCap;
    int threads = 1;
};

void emit(const GlobalOptions& g, const json& doc, const std::string& ascii,
          const std::string& csv = "") {
    if (g.format == "json")
        std::cout << doc.dump(2) << "\n";
    else if (g.format == "csv" && !csv.empty())
        std::cout << csv;
    else
        std::cout << ascii;
}

int cmd_brackets(const GlobalOptions& g, const std::string& type_arg,
                 const std::string& word_arg) {
    if (type_arg.empty() == word_arg.empty())
        throw std::invalid_argument("brackets: give exactly one of --type, --word");
    if (!word_arg.empty()) {
        Word u = Word::parse(word_arg);
        std::uint64_t b = bracket(u, g.budget);
        json doc{{"schema", io::kSchema},
                 {"command", "brackets"},
                 {"word", u.str()},
                 {"bracket", b}};
        emit(g, doc, "[" + u.str() + "] = " + std::to_string(b) + "\n",
             "word,bracket\n" + u.str() + "," + std::to_string(b) + "\n");
        return kExitOk;
    }
    TypeVector m = TypeVector::parse(type_arg);
    auto counts = count_all(m, g.budget, g.threads);
    json doc = io::counts_to_json(m, counts);
    doc["command"] = "brackets";
    emit(g, doc, io::counts_to_ascii(counts), io::counts_to_csv(counts));
    return kExitOk;
}

int cmd_stationary(const GlobalOptions& g, const std::string& type_arg,
                   const std::string& method) {
    TypeVector m = TypeVector::parse(type_arg);
    StationaryTable table;
    if (method == "exact") {
        table = stationary_exact({m}, g.cap);
    } else if (method == "mlq") {
        table = stationary_from_counts(m, count_all(m, g.budget, g.threads));
    } else {
        throw std::invalid_argument("stationary: method must be exact or mlq");
    }
    json doc = io::stationary_to_json(table);
    doc["command"] = "stationary";
    doc["method"] = method;
    emit(g, doc, io::stationary_to_ascii(table), io::stationary_to_csv(table));
    return kExitOk;
}

int cmd_simulate(const GlobalOptions& g, const std::string& type_arg,
                 const std::string& start_arg, std::uint64_t steps,
                 std::uint64_t seed, const std::string& rates_arg,
                 const std::string& convention_arg) {
    ChainSpec spec;
    spec.m = TypeVector::parse(type_arg);
    if (!rates_arg.empty()) spec.rates = parse_rational_list(rates_arg);
    if (convention_arg == "blocker")
        spec.convention = RateConvention::BlockerClass;
    else if (convention_arg != "jumper")
        throw std::invalid_argument("simulate: convention must be jumper or blocker");
    Word start = start_arg.empty() ? sorted_word(spec.m) : Word::parse(start_arg);

    SimulationResult sim = simulate(spec, start, steps, seed);
    json doc = io::simulation_to_json(sim);
    doc["command"] = "simulate";
    doc["type"] = spec.m.str();

    std::string ascii = "simulated " + std::to_string(steps) + " steps from " +
                        start.str() + " (seed " + std::to_string(seed) + ", " +
                        sim.rng + ")\n";
    for (const auto& [w, c] : sim.counts)
        ascii += "  " + w.str() + ": " + std::to_string(c) + "\n";

    mpz_class states = multinomial(spec.m.counts());
    if (spec.homogeneous() && states <= mpz_class(static_cast<unsigned long>(g.cap))) {
        mpq_class tv = sim.tv_against(stationary_exact({spec.m}, g.cap));
        doc["tv_to_exact"] = format_rational(tv);
        ascii += "total variation to exact stationary: " + format_rational(tv) +
                 " (~" + std::to_string(tv.get_d()) + ")\n";
    }
    if (!spec.homogeneous()) {
        InhomParams p = InhomParams::from_rates(*spec.rates);
        mpq_class predicted =
            inhom_sorted_value(spec.m, p) / inhom_partition_value(spec.m, p);
        mpq_class freq = sim.frequency(sorted_word(spec.m));
        doc["sorted_word"] = sorted_word(spec.m).str();
        doc["sorted_word_frequency"] = format_rational(freq);
        doc["sorted_word_closed_form"] = format_rational(predicted);
        ascii += "sorted word " + sorted_word(spec.m).str() + ": frequency " +
                 std::to_string(freq.get_d()) + ", closed form " +
                 std::to_string(predicted.get_d()) + " (" +
                 to_string(spec.convention) + " convention)\n";
    }
    emit(g, doc, ascii);
    return kExitOk;
}

int cmd_render(const GlobalOptions& g, const std::string& word_arg, int index,
               const std::string& style) {
    Word u = Word::parse(word_arg);
    TypeVector m = type_of(u);
    m.require_valid();
    std::vector<LabelledMlq> hits;
    MlqEnumerator en(m, g.budget);
    Mlq q;
    while (en.next(q)) {
        LabelledMlq lab = label(q);
        if (lab.bottom() == u) hits.push_back(lab);
    }
    if (index != 0 && (index < 1 || index > static_cast<int>(hits.size())))
        throw std::invalid_argument("render: index out of range, [" + u.str() +
                                    "] = " + std::to_string(hits.size()));
    if (style == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < hits.size(); ++i)
            if (index == 0 || static_cast<int>(i + 1) == index)
                arr.push_back(io::mlq_to_json(hits[i]));
        json doc{{"schema", io::kSchema},
                 {"command", "render"},
                 {"word", u.str()},
                 {"bracket", hits.size()},
                 {"mlqs", arr}};
        std::cout << doc.dump(2) << "\n";
    } else if (style == "ascii") {
        std::cout << "[" << u.str() << "] = " << hits.size() << "\n";
        for (std::size_t i = 0; i < hits.size(); ++i) {
            if (index != 0 && static_cast<int>(i + 1) != index) continue;
            std::cout << "\n" << io::mlq_to_ascii(hits[i]);
        }
    } else {
        throw std::invalid_argument("render: style must be ascii or json");
    }
    return kExitOk;
}

int cmd_verify(const GlobalOptions& g, const std::string& suite, int nmax) {
    verify::Options opts{g.budget, g.cap};
    std::vector<verify::CheckResult> results;
    if (suite == "all") {
        results = verify::run_all(nmax, opts);
    } else if (verify::is_suite(suite)) {
        results.push_back(verify::run_suite(suite, nmax, opts));
    } else {
        std::string names = "all";
        for (const std::string& s : verify::suite_names()) names += ", " + s;
        throw std::invalid_argument("verify: unknown suite '" + suite +
                                    "' (expected one of: " + names + ")");
    }
    bool all_passed = true;
    json arr = json::array();
    std::string ascii;
    for (const auto& c : results) {
        all_passed = all_passed && c.passed;
        arr.push_back(io::check_to_json(c));
        char line[512];
        std::snprintf(line, sizeof line, "%s %-16s n<=%d  %8llu checks  %7.2fs  %s\n",
                      c.passed ? "PASS" : "FAIL", c.suite.c_str(), c.nmax,
                      static_cast<unsigned long long>(c.cases), c.seconds,
                      c.statement.c_str());
        ascii += line;
        if (!c.passed) ascii += "  first counterexample: " + c.counterexample + "\n";
    }
    json doc{{"schema", io::kSchema},
             {"command", "verify"},
             {"passed", all_passed},
             {"checks", arr}};
    emit(g, doc, ascii);
    return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circular multispecies TASEP: exact stationary distributions "
                 "via multiline queues, closed-form evaluations and a seeded "
                 "simulator"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"ascii", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--budget", g.budget,
                   "Largest MLQ enumeration (Z_m) this run may attempt")
        ->envname("MTASEP_BUDGET")
        ->capture_default_str();
    app.add_option("--cap", g.cap, "Largest state space an exact solve may attempt")
        ->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads for enumeration tallies")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* brackets = app.add_subcommand(
        "brackets", "Count the multiline queues representing each word");
    std::string br_type, br_word;
    brackets->add_option("--type", br_type, "Type vector, e.g. 1,1,2");
    brackets->add_option("--word", br_word, "Single word, e.g. 1423");

    auto* stationary = app.add_subcommand(
        "stationary", "Exact stationary distribution of a type");
    std::string st_type, st_method = "exact";
    stationary->add_option("--type", st_type, "Type vector")->required();
    stationary->add_option("--method", st_method, "exact (linear solve) or mlq")
        ->check(CLI::IsMember({"exact", "mlq"}))
        ->capture_default_str();

    auto* simulate = app.add_subcommand(
        "simulate", "Run the chain with the seeded counter-based generator");
    std::string si_type, si_start, si_rates, si_convention = "jumper";
    std::uint64_t si_steps = 0, si_seed = 0;
    simulate->add_option("--type", si_type, "Type vector")->required();
    simulate->add_option("--start", si_start, "Start word (default: sorted word)");
    simulate->add_option("--steps", si_steps, "Number of single-site updates")
        ->required();
    simulate->add_option("--seed", si_seed, "Generator seed")->required();
    simulate->add_option("--rates", si_rates,
                         "Jump rates x_1..x_{r-1} as rationals, e.g. 1,2 or 1/2,1");
    simulate->add_option("--convention", si_convention,
                         "Class whose rate applies: jumper or blocker")
        ->check(CLI::IsMember({"jumper", "blocker"}))
        ->capture_default_str();

    auto* render = app.add_subcommand(
        "render", "Draw the multiline queues representing a word");
    std::string re_word, re_style = "ascii";
    int re_index = 0;
    render->add_option("--word", re_word, "Word to render")->required();
    render->add_option("--index", re_index, "Render only the k-th MLQ (1-based)");
    render->add_option("--style", re_style, "ascii or json")
        ->check(CLI::IsMember({"ascii", "json"}))
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand(
        "verify", "Exhaustively check the exact identities at desk scale");
    std::string ve_suite = "all";
    int ve_nmax = 4;
    verify_cmd->add_option("--suite", ve_suite,
                           "Suite name or 'all' (see --help-suites)")
        ->capture_default_str();
    verify_cmd->add_option("--nmax", ve_nmax, "Largest word length to cover")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (brackets->parsed()) return cmd_brackets(g, br_type, br_word);
        if (stationary->parsed()) return cmd_stationary(g, st_type, st_method);
        if (simulate->parsed())
            return cmd_simulate(g, si_type, si_start, si_steps, si_seed, si_rates,
                                si_convention);
        if (render->parsed()) return cmd_render(g, re_word, re_index, re_style);
        if (verify_cmd->parsed()) return cmd_verify(g, ve_suite, ve_nmax);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
