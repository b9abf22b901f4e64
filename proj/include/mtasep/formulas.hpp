#pragma once

#include <functional>
#include <vector>

#include <gmpxx.h>

#include "mtasep/word.hpp"

namespace mtasep {

/// Closed form for the bracket of the sorted word of strict type m:
/// prod_{i=2}^{r-1} C(n - m_i, m_1 + ... + m_{i-1}); the empty product 1
/// when r <= 2.
mpz_class sorted_bracket_formula(const TypeVector& m);

/// Both sides of C(n,b) = sum_{k=0..b} C(n-s-k-1, b-k) C(s+k, s),
/// evaluated independently. Equal whenever n >= s + b + 1; binomials with
/// a negative upper index are 0.
std::pair<mpz_class, mpz_class> binomial_identity_sides(long n, long b, long s);

/// C(s+b, s) * base: the predicted bracket [u e^(b)] given
/// base = [u e^(0)].
mpz_class scaled_bracket_prediction(const mpz_class& base, long s, long b);

/// Repeats the C(s+b, s) scaling step down to a single letter: each pass
/// merges the top two letters of the type, so [sorted(m)] unwinds to the
/// base case [1^n] = 1. Independent route to sorted_bracket_formula.
mpz_class chained_scaling_bracket(const TypeVector& m);

/// Inverse rates v_i = 1/x_i for the inhomogeneous chain; exactly r
/// entries (the last one never survives into a value, since the r-th
/// composition sum is empty).
struct InhomParams {
    std::vector<mpq_class> v;

    static InhomParams ones(int r);
    static InhomParams from_rates(const std::vector<mpq_class>& rates);
    void validate(int r) const;
};

/// All (parts)-tuples of nonnegative integers summing to total, in
/// lexicographic order; C(total + parts - 1, parts - 1) of them.
std::vector<std::vector<int>> compositions(int total, int parts);

/// Streaming form of the above.
void for_each_composition(int total, int parts,
                          const std::function<void(const std::vector<int>&)>& fn);

/// The inhomogeneous sorted-word value:
/// prod_{j=1}^r sum_{t_1+...+t_j = n - (m_1+...+m_j)}
///   (prod_{i<j} C(m_i + t_i - 1, m_i - 1) v_i^{t_i}) v_j^{t_j}.
/// At v = 1 this equals sorted_bracket_formula(m).
mpq_class inhom_sorted_value(const TypeVector& m, const InhomParams& p);

/// The inhomogeneous partition value: same shape with the j-th factor
/// carrying C(m_j + t_j, m_j) v_j^{t_j}. At v = 1 this equals Z_m.
mpq_class inhom_partition_value(const TypeVector& m, const InhomParams& p);

}  // namespace mtasep
