#include "mtasep/formulas.hpp"

#include <stdexcept>

#include "mtasep/numeric.hpp"

namespace mtasep {

mpz_class sorted_bracket_formula(const TypeVector& m) {
    m.require_valid();
    mpz_class out = 1;
    int n = m.total();
    for (int i = 2; i <= m.rank() - 1; ++i)
        out *= binomial(n - m.count(i), m.cumulative(i - 1));
    return out;
}

std::pair<mpz_class, mpz_class> binomial_identity_sides(long n, long b, long s) {
    if (n < 0 || b < 0 || s < 0)
        throw std::invalid_argument("binomial_identity_sides: negative argument");
    mpz_class left = binomial(n, b);
    mpz_class right = 0;
    for (long k = 0; k <= b; ++k)
        right += binomial(n - s - k - 1, b - k) * binomial(s + k, s);
    return {left, right};
}

mpz_class scaled_bracket_prediction(const mpz_class& base, long s, long b) {
    if (s < 0 || b < 0)
        throw std::invalid_argument("scaled_bracket_prediction: negative argument");
    return binomial(s + b, s) * base;
}

mpz_class chained_scaling_bracket(const TypeVector& m) {
    m.require_valid();
    std::vector<int> counts = m.counts();
    mpz_class out = 1;
    while (counts.size() >= 2) {
        int r = static_cast<int>(counts.size());
        int b = counts[r - 1];
        int s = 0;
        for (int i = 0; i < r - 2; ++i) s += counts[i];
        out *= binomial(s + b, s);
        counts[r - 2] += counts[r - 1];
        counts.pop_back();
    }
    return out;
}

InhomParams InhomParams::ones(int r) {
    InhomParams p;
    p.v.assign(r, mpq_class(1));
    return p;
}

InhomParams InhomParams::from_rates(const std::vector<mpq_class>& rates) {
    InhomParams p;
    for (const mpq_class& x : rates) {
        if (x <= 0) throw std::invalid_argument("rates must be positive");
        p.v.push_back(1 / x);
    }
    p.v.push_back(1);
    return p;
}

void InhomParams::validate(int r) const {
    if (static_cast<int>(v.size()) != r)
        throw std::invalid_argument("inhomogeneous parameters need r entries");
    for (const mpq_class& q : v)
        if (q <= 0) throw std::invalid_argument("inhomogeneous parameters must be positive");
}

void for_each_composition(int total, int parts,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (total < 0) throw std::invalid_argument("compositions: negative total");
    if (parts == 0) {
        if (total > 0)
            throw std::invalid_argument("compositions: zero parts with positive total");
        std::vector<int> empty;
        fn(empty);
        return;
    }
    std::vector<int> t(parts, 0);
    // Lexicographic: t[0] descends from high values last; generate by
    // recursion on the first coordinate.
    std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (idx == parts - 1) {
            t[idx] = remaining;
            fn(t);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            t[idx] = v;
            rec(idx + 1, remaining - v);
        }
    };
    rec(0, total);
}

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    for_each_composition(total, parts, [&](const std::vector<int>& t) {
        out.push_back(t);
    });
    return out;
}

namespace {

// Shared evaluator: the j-th factor sums over compositions of
// n - (m_1+...+m_j) into j parts; `partition` switches the j-th term
// between v_j^{t_j} and C(m_j + t_j, m_j) v_j^{t_j}.
mpq_class inhom_value(const TypeVector& m, const InhomParams& p, bool partition) {
    m.require_valid();
    p.validate(m.rank());
    int n = m.total();
    mpq_class product = 1;
    for (int j = 1; j <= m.rank(); ++j) {
        mpq_class factor = 0;
        for_each_composition(n - m.cumulative(j), j, [&](const std::vector<int>& t) {
            mpq_class term = 1;
            for (int i = 1; i <= j - 1; ++i) {
                term *= binomial(m.count(i) + t[i - 1] - 1, m.count(i) - 1);
                if (term == 0) return;
                term *= pow_q(p.v[i - 1], t[i - 1]);
            }
            if (partition) term *= binomial(m.count(j) + t[j - 1], m.count(j));
            term *= pow_q(p.v[j - 1], t[j - 1]);
            factor += term;
        });
        product *= factor;
    }
    return product;
}

}  // namespace

mpq_class inhom_sorted_value(const TypeVector& m, const InhomParams& p) {
    return inhom_value(m, p, false);
}

mpq_class inhom_partition_value(const TypeVector& m, const InhomParams& p) {
    return inhom_value(m, p, true);
}

}  // namespace mtasep
