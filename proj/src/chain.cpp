#include "mtasep/chain.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "mtasep/errors.hpp"
#include "mtasep/numeric.hpp"

namespace mtasep {

void ChainSpec::validate() const {
    m.require_valid();
    if (rates) {
        if (static_cast<int>(rates->size()) != m.rank() - 1)
            throw std::invalid_argument("rates must have r-1 entries");
        for (const mpq_class& x : *rates)
            if (x <= 0) throw std::invalid_argument("rates must be positive");
    }
}

std::vector<CyclicDescent> cyclic_descents(const Word& w) {
    std::vector<CyclicDescent> out;
    int n = w.size();
    for (int i = 0; i < n; ++i) {
        int left = (i + n - 1) % n;
        if (w.letter(i) < w.letter(left)) {
            std::vector<int> letters = w.letters();
            std::swap(letters[i], letters[left]);
            out.push_back({i, w.letter(i), w.letter(left), Word(std::move(letters))});
        }
    }
    return out;
}

TransitionList transitions(const Word& w) {
    if (w.empty()) throw std::invalid_argument("transitions: empty word");
    TransitionList out;
    mpq_class step(1, w.size());
    step.canonicalize();
    for (const CyclicDescent& d : cyclic_descents(w))
        out.moves.emplace_back(d.target, step);
    out.loop = 1;
    for (const auto& [target, p] : out.moves) out.loop -= p;
    return out;
}

namespace {

// Probability that the descent d fires in one step: 1/n, thinned by
// x_c / max(x) when rates are present.
mpq_class step_probability(const ChainSpec& spec, const CyclicDescent& d, int n,
                           const mpq_class& max_rate) {
    mpq_class p(1, n);
    p.canonicalize();
    if (spec.rates) {
        int cls = spec.convention == RateConvention::JumperClass ? d.smaller
                                                                 : d.larger - 1;
        p *= (*spec.rates)[cls - 1] / max_rate;
    }
    return p;
}

}  // namespace

mpq_class TransitionMatrix::at(int row, int col) const {
    for (const auto& [c, p] : rows[row])
        if (c == col) return p;
    return 0;
}

TransitionMatrix transition_matrix(const ChainSpec& spec, std::uint64_t cap) {
    spec.validate();
    mpz_class states = multinomial(spec.m.counts());
    if (states > mpz_class(static_cast<unsigned long>(cap)))
        throw CapError("state cap exceeded: type " + spec.m.str() + " has " +
                       states.get_str() + " words > " + std::to_string(cap));

    TransitionMatrix out;
    out.states = words_of_type(spec.m);
    int n = spec.m.total();
    std::map<Word, int> index;
    for (int i = 0; i < static_cast<int>(out.states.size()); ++i)
        index[out.states[i]] = i;

    mpq_class max_rate = 1;
    if (spec.rates) max_rate = *std::max_element(spec.rates->begin(), spec.rates->end());

    out.rows.resize(out.states.size());
    for (int i = 0; i < static_cast<int>(out.states.size()); ++i) {
        std::map<int, mpq_class> row;
        mpq_class loop = 1;
        for (const CyclicDescent& d : cyclic_descents(out.states[i])) {
            mpq_class p = step_probability(spec, d, n, max_rate);
            row[index.at(d.target)] += p;
            loop -= p;
        }
        if (loop != 0) row[i] += loop;
        out.rows[i].assign(row.begin(), row.end());
    }
    return out;
}

namespace {

// Exact integer Gaussian elimination on the (N+1) x N system
// (P^T - I | 0) with the row (1 ... 1 | 1) appended. Rows are scaled to
// integers and kept primitive (content divided out); the pivot in each
// column is the remaining nonzero row with the fewest nonzeros, which
// keeps fill-in down on these sparse systems.
class RationalKernelSolver {
public:
    explicit RationalKernelSolver(const TransitionMatrix& P) {
        N_ = static_cast<int>(P.states.size());
        rows_.assign(N_ + 1, std::vector<mpz_class>(N_ + 1, 0));
        // Balance equations: column j of row i gets P(j -> i) - delta_ij,
        // scaled by a common denominator over the row.
        std::vector<std::vector<std::pair<int, mpq_class>>> cols(N_);
        for (int j = 0; j < N_; ++j)
            for (const auto& [c, p] : P.rows[j]) cols[c].emplace_back(j, p);
        for (int i = 0; i < N_; ++i) {
            mpz_class lcm = 1;
            mpq_class diag = -1;
            for (auto& [j, p] : cols[i]) {
                if (j == i) diag += p;
            }
            std::vector<std::pair<int, mpq_class>> entries;
            for (auto& [j, p] : cols[i])
                if (j != i) entries.emplace_back(j, p);
            if (diag != 0) entries.emplace_back(i, diag);
            for (auto& [j, q] : entries)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
            for (auto& [j, q] : entries) {
                mpq_class scaled = q * lcm;
                assert(scaled.get_den() == 1);
                rows_[i][j] = scaled.get_num();
            }
        }
        for (int j = 0; j < N_; ++j) rows_[N_][j] = 1;
        rows_[N_][N_] = 1;  // right-hand side of the normalization row
        nnz_.resize(N_ + 1);
        for (int i = 0; i <= N_; ++i) nnz_[i] = count_nonzero(rows_[i]);
    }

    std::vector<mpq_class> solve() {
        for (int k = 0; k < N_; ++k) {
            int pivot = -1;
            for (int i = k; i <= N_; ++i) {
                if (rows_[i][k] == 0) continue;
                if (pivot < 0 || nnz_[i] < nnz_[pivot]) pivot = i;
            }
            if (pivot < 0)
                throw SolveError("stationary solve: rank defect at column " +
                                 std::to_string(k));
            std::swap(rows_[k], rows_[pivot]);
            std::swap(nnz_[k], nnz_[pivot]);
            for (int i = k + 1; i <= N_; ++i) {
                if (rows_[i][k] == 0) continue;
                eliminate(rows_[i], rows_[k], k);
                nnz_[i] = count_nonzero(rows_[i]);
            }
        }
        // The leftover equation must have vanished, or the system was
        // inconsistent and the chain had no unique stationary law.
        for (int j = 0; j <= N_; ++j)
            if (rows_[N_][j] != 0)
                throw SolveError("stationary solve: inconsistent system");

        std::vector<mpq_class> x(N_);
        for (int k = N_ - 1; k >= 0; --k) {
            mpq_class acc(rows_[k][N_]);
            for (int j = k + 1; j < N_; ++j)
                if (rows_[k][j] != 0) acc -= mpq_class(rows_[k][j]) * x[j];
            x[k] = acc / mpq_class(rows_[k][k]);
        }
        return x;
    }

private:
    static int count_nonzero(const std::vector<mpz_class>& row) {
        int c = 0;
        for (const mpz_class& v : row)
            if (v != 0) ++c;
        return c;
    }

    // row := row * pivot[k] - pivot * row[k], then divided by its content.
    void eliminate(std::vector<mpz_class>& row, const std::vector<mpz_class>& piv,
                   int k) {
        mpz_class a = piv[k];
        mpz_class b = row[k];
        mpz_class content = 0;
        for (int j = k; j <= N_; ++j) {
            if (row[j] == 0 && piv[j] == 0) continue;
            row[j] = row[j] * a - piv[j] * b;
            if (row[j] != 0)
                mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), row[j].get_mpz_t());
        }
        assert(row[k] == 0);
        if (content > 1)
            for (int j = k + 1; j <= N_; ++j)
                if (row[j] != 0)
                    mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(),
                                 content.get_mpz_t());
    }

    int N_ = 0;
    std::vector<std::vector<mpz_class>> rows_;
    std::vector<int> nnz_;
};

}  // namespace

const mpq_class& StationaryTable::at(const Word& w) const {
    auto it = entries.find(w);
    if (it == entries.end())
        throw std::invalid_argument("stationary table: no entry for " + w.str());
    return it->second;
}

mpz_class StationaryTable::common_denominator() const {
    mpz_class z = 1;
    for (const auto& [w, p] : entries)
        mpz_lcm(z.get_mpz_t(), z.get_mpz_t(), p.get_den().get_mpz_t());
    return z;
}

StationaryTable stationary_exact(const ChainSpec& spec, std::uint64_t cap) {
    TransitionMatrix P = transition_matrix(spec, cap);
    RationalKernelSolver solver(P);
    std::vector<mpq_class> x = solver.solve();

    StationaryTable out;
    out.type = spec.m;
    mpq_class total = 0;
    for (int i = 0; i < static_cast<int>(P.states.size()); ++i) {
        if (x[i] < 0)
            throw SolveError("stationary solve: negative mass at " +
                             P.states[i].str());
        out.entries[P.states[i]] = x[i];
        total += x[i];
    }
    if (total != 1) throw SolveError("stationary solve: masses do not sum to 1");
    return out;
}

StationaryTable stationary_from_counts(const TypeVector& m,
                                       const std::map<Word, std::uint64_t>& counts) {
    StationaryTable out;
    out.type = m;
    mpz_class z = 0;
    for (const auto& [w, c] : counts) z += static_cast<unsigned long>(c);
    for (const auto& [w, c] : counts) {
        mpq_class p(mpz_class(static_cast<unsigned long>(c)), z);
        p.canonicalize();
        out.entries[w] = p;
    }
    return out;
}

mpq_class tv_distance(const StationaryTable& a, const StationaryTable& b) {
    mpq_class acc = 0;
    for (const auto& [w, p] : a.entries) {
        auto it = b.entries.find(w);
        mpq_class q = it == b.entries.end() ? mpq_class(0) : it->second;
        acc += abs(p - q);
    }
    for (const auto& [w, q] : b.entries)
        if (!a.entries.count(w)) acc += abs(q);
    return acc / 2;
}

}  // namespace mtasep
