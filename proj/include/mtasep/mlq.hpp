#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "mtasep/word.hpp"

namespace mtasep {

/// Default ceiling on the number of MLQs an enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// An r x n array of cells where row i (1-based, top to bottom) carries
/// exactly m_1 + ... + m_i boxes. Rows are stored as bitmasks, bit j =
/// column j+1; n is limited to 64 columns, far beyond any enumerable size.
struct Mlq {
    int n = 0;
    int r = 0;
    std::vector<std::uint64_t> rows;  // rows[i-1] marks the boxes of row i

    /// The type (m_1,...,m_r) implied by the row counts, m_i = |row i| -
    /// |row i-1|. Throws if some difference is negative.
    TypeVector type(TypeVector::Mode mode = TypeVector::Mode::Strict) const;

    /// Checks the row-count invariant against m (strict or relaxed).
    bool matches(const TypeVector& m) const;

    bool box_at(int row, int col) const {  // 1-based row and column
        return (rows[row - 1] >> (col - 1)) & 1;
    }

    auto operator<=>(const Mlq&) const = default;
};

/// Tie order used when walking the boxes of row i-1: among boxes of equal
/// label, by column. The labelling is independent of this choice; debug
/// builds of label() recompute under the reversed order and assert
/// agreement.
enum class TieOrder { ColumnAscending, ColumnDescending };

/// An MLQ plus the class label of every box. labels[i-1][j] is the label
/// of the box of row i at column j+1, or 0 for an empty cell.
struct LabelledMlq {
    Mlq base;
    std::vector<std::vector<int>> labels;

    Word bottom() const;

    bool operator==(const LabelledMlq&) const = default;
};

/// Assigns every box its class label: each box of row 1 is labelled 1;
/// the boxes of row i-1, taken in increasing label order, each claim the
/// first unlabelled box of row i weakly to their right (cyclically), and
/// the m_i boxes of row i left over are labelled i.
LabelledMlq label(const Mlq& q, TieOrder order = TieOrder::ColumnAscending);

/// The word spelled by the bottom-row labels, read left to right.
Word bottom_word(const Mlq& q);

/// Streams the Z_m distinct MLQs of type m, row masks in lexicographic
/// order of their column sets, top row varying slowest.
class MlqEnumerator {
public:
    explicit MlqEnumerator(const TypeVector& m,
                           std::uint64_t budget = kDefaultBudget);

    /// Fills out with the next MLQ; false once exhausted.
    bool next(Mlq& out);

private:
    int n_ = 0;
    int r_ = 0;
    std::vector<std::uint64_t> masks_;
    std::vector<int> box_counts_;
    bool done_ = false;
    bool first_ = true;
};

/// Materializes the full enumeration; intended for small types.
std::vector<Mlq> enumerate_mlqs(const TypeVector& m,
                                std::uint64_t budget = kDefaultBudget);

/// Z_m = prod_i C(n, m_1+...+m_i), the number of m-MLQs. Trailing
/// relaxed zeros contribute full rows and a factor C(n,n) = 1.
mpz_class partition_function(const TypeVector& m);

/// Tally of bottom words over every MLQ of type m: count_all(m)[u] = [u]
/// and the counts sum to Z_m. Enumeration shares labelling work across
/// MLQs agreeing in their top rows, and may be partitioned over workers
/// by top-row combination; tallies merge associatively.
std::map<Word, std::uint64_t> count_all(const TypeVector& m,
                                        std::uint64_t budget = kDefaultBudget,
                                        int threads = 1);

/// [u]: the number of MLQs representing u (bottom word u), counted over
/// the type of u.
std::uint64_t bracket(const Word& u, std::uint64_t budget = kDefaultBudget);

/// The box move behind [beta alpha w] = [alpha alpha w]: for an MLQ whose
/// bottom word begins (r, r-1), the cell of row r-1 in column 1 is
/// necessarily empty; filling it yields an MLQ of the relaxed type
/// (m_1,...,m_{r-1}+1, m_r - 1) whose bottom word begins (r-1, r-1).
Mlq beta_alpha_forward(const Mlq& q);

/// Inverse move: removes the box of row r-1 in column 1 from an MLQ whose
/// bottom word begins (r-1, r-1).
Mlq beta_alpha_backward(const Mlq& q);

}  // namespace mtasep
