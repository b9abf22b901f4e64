#include "mtasep/mlq.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "mtasep/errors.hpp"
#include "mtasep/numeric.hpp"

namespace mtasep {

namespace {

std::uint64_t full_mask(int n) {
    return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
}

std::uint64_t first_combination(int k) {
    return k == 0 ? 0 : ((k >= 64 ? ~0ULL : (1ULL << k) - 1));
}

std::uint64_t last_combination(int n, int k) {
    return first_combination(k) << (n - k);
}

// Gosper's hack: next k-subset mask in increasing numeric order.
std::uint64_t next_combination(std::uint64_t v) {
    std::uint64_t t = v | (v - 1);
    return (t + 1) | ((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1);
}

// A labelled box, packed as label * 64 + column for cheap ordered walks.
using Source = int;

constexpr Source pack_source(int label, int col) { return label * 64 + col; }
constexpr int source_label(Source s) { return s / 64; }
constexpr int source_col(Source s) { return s % 64; }

// Core of the labelling: walk the boxes of the row above in increasing
// label order and drop each label on the first free box of `mask` weakly
// to its right, cyclically; boxes left over get the row's own index.
// sources must already be sorted for the desired tie order.
void place_row(std::uint64_t mask, int row, const std::vector<Source>& sources,
               std::vector<int>& labels_out) {
    std::fill(labels_out.begin(), labels_out.end(), 0);
    std::uint64_t avail = mask;
    for (Source s : sources) {
        int col = source_col(s);
        std::uint64_t at_or_right = avail & ~((1ULL << col) - 1);
        std::uint64_t pick = at_or_right ? at_or_right : avail;
        assert(pick != 0);
        int pos = std::countr_zero(pick);
        labels_out[pos] = source_label(s);
        avail &= ~(1ULL << pos);
    }
    while (avail) {
        labels_out[std::countr_zero(avail)] = row;
        avail &= avail - 1;
    }
}

std::vector<Source> sources_of(const std::vector<int>& labels, TieOrder order) {
    std::vector<Source> out;
    for (int col = 0; col < static_cast<int>(labels.size()); ++col)
        if (labels[col] != 0) out.push_back(pack_source(labels[col], col));
    std::sort(out.begin(), out.end());
    if (order == TieOrder::ColumnDescending) {
        // Reverse each run of equal labels.
        auto it = out.begin();
        while (it != out.end()) {
            auto run = it;
            while (run != out.end() && source_label(*run) == source_label(*it)) ++run;
            std::reverse(it, run);
            it = run;
        }
    }
    return out;
}

LabelledMlq label_impl(const Mlq& q, TieOrder order) {
    LabelledMlq out;
    out.base = q;
    out.labels.assign(q.r, std::vector<int>(q.n, 0));
    std::vector<Source> sources;
    for (int row = 1; row <= q.r; ++row) {
        place_row(q.rows[row - 1], row, sources, out.labels[row - 1]);
        if (row < q.r) sources = sources_of(out.labels[row - 1], order);
    }
    return out;
}

}  // namespace

TypeVector Mlq::type(TypeVector::Mode mode) const {
    std::vector<int> counts(r);
    int prev = 0;
    for (int i = 0; i < r; ++i) {
        int boxes = std::popcount(rows[i]);
        counts[i] = boxes - prev;
        if (counts[i] < 0)
            throw std::invalid_argument("mlq: row " + std::to_string(i + 1) +
                                        " has fewer boxes than the row above");
        prev = boxes;
    }
    return TypeVector(std::move(counts), mode);
}

bool Mlq::matches(const TypeVector& m) const {
    if (r != m.rank() || static_cast<int>(rows.size()) != r) return false;
    if (n != m.total()) return false;
    for (int i = 1; i <= r; ++i) {
        if (rows[i - 1] & ~full_mask(n)) return false;
        if (std::popcount(rows[i - 1]) != m.cumulative(i)) return false;
    }
    return true;
}

Word LabelledMlq::bottom() const {
    std::vector<int> letters;
    for (int l : labels.back())
        if (l != 0) letters.push_back(l);
    return Word(std::move(letters));
}

LabelledMlq label(const Mlq& q, TieOrder order) {
    if (q.r < 1 || static_cast<int>(q.rows.size()) != q.r || q.n < 1 || q.n > 64)
        throw std::invalid_argument("mlq: malformed dimensions");
    q.type();  // validates nondecreasing row counts
    LabelledMlq out = label_impl(q, order);
#ifndef NDEBUG
    TieOrder flipped = order == TieOrder::ColumnAscending
                           ? TieOrder::ColumnDescending
                           : TieOrder::ColumnAscending;
    assert(out.labels == label_impl(q, flipped).labels);
#endif
    return out;
}

Word bottom_word(const Mlq& q) {
    return label(q).bottom();
}

MlqEnumerator::MlqEnumerator(const TypeVector& m, std::uint64_t budget) {
    m.require_valid();
    if (partition_function(m) > mpz_class(static_cast<unsigned long>(budget)))
        throw BudgetError("enumeration budget exceeded: Z_" + m.str() + " = " +
                          partition_function(m).get_str() + " > " +
                          std::to_string(budget));
    n_ = m.total();
    r_ = m.rank();
    if (n_ > 64) throw std::invalid_argument("mlq enumeration: n > 64");
    box_counts_.resize(r_);
    masks_.resize(r_);
    for (int i = 1; i <= r_; ++i) {
        box_counts_[i - 1] = m.cumulative(i);
        masks_[i - 1] = first_combination(box_counts_[i - 1]);
    }
}

bool MlqEnumerator::next(Mlq& out) {
    if (done_) return false;
    if (!first_) {
        int i = r_ - 1;
        for (; i >= 0; --i) {
            if (masks_[i] == last_combination(n_, box_counts_[i])) {
                masks_[i] = first_combination(box_counts_[i]);
            } else {
                masks_[i] = next_combination(masks_[i]);
                break;
            }
        }
        if (i < 0) {
            done_ = true;
            return false;
        }
    }
    first_ = false;
    out.n = n_;
    out.r = r_;
    out.rows = masks_;
    return true;
}

std::vector<Mlq> enumerate_mlqs(const TypeVector& m, std::uint64_t budget) {
    MlqEnumerator en(m, budget);
    std::vector<Mlq> out;
    Mlq q;
    while (en.next(q)) out.push_back(q);
    return out;
}

mpz_class partition_function(const TypeVector& m) {
    m.require_valid();
    mpz_class z = 1;
    for (int i = 1; i <= m.rank(); ++i)
        z *= binomial(m.total(), m.cumulative(i));
    return z;
}

namespace {

// Tally with a packed fast path: words with n <= 16 and r <= 15 fit in a
// 64-bit key at 4 bits per letter.
struct Tally {
    bool packed;
    std::unordered_map<std::uint64_t, std::uint64_t> fast;
    std::map<Word, std::uint64_t> slow;

    explicit Tally(int n, int r) : packed(n <= 16 && r <= 15) {}

    void add(const std::vector<int>& bottom_labels) {
        if (packed) {
            std::uint64_t key = 0;
            for (int l : bottom_labels) key = key << 4 | static_cast<unsigned>(l);
            fast[key]++;
        } else {
            slow[Word(bottom_labels)]++;
        }
    }

    void merge_into(std::map<Word, std::uint64_t>& out, int n) const {
        if (packed) {
            for (auto [key, c] : fast) {
                std::vector<int> letters(n);
                std::uint64_t k = key;
                for (int i = n - 1; i >= 0; --i) {
                    letters[i] = static_cast<int>(k & 0xF);
                    k >>= 4;
                }
                out[Word(std::move(letters))] += c;
            }
        } else {
            for (const auto& [w, c] : slow) out[w] += c;
        }
    }
};

struct CountContext {
    int n;
    int r;
    std::vector<int> box_counts;  // cumulative, per row
};

// Depth-first over rows: all MLQs sharing rows 1..i share that prefix's
// labelling, so each prefix is labelled once.
void count_recurse(const CountContext& ctx, int row,
                   const std::vector<Source>& sources,
                   std::vector<std::vector<int>>& scratch, Tally& tally) {
    std::vector<int>& labels = scratch[row - 1];
    if (row == ctx.r) {
        place_row(full_mask(ctx.n), row, sources, labels);
        tally.add(labels);
        return;
    }
    int k = ctx.box_counts[row - 1];
    std::uint64_t mask = first_combination(k);
    std::uint64_t last = last_combination(ctx.n, k);
    while (true) {
        place_row(mask, row, sources, labels);
        count_recurse(ctx, row + 1, sources_of(labels, TieOrder::ColumnAscending),
                      scratch, tally);
        if (mask == last) break;
        mask = next_combination(mask);
    }
}

}  // namespace

std::map<Word, std::uint64_t> count_all(const TypeVector& m,
                                        std::uint64_t budget, int threads) {
    m.require_valid();
    mpz_class z = partition_function(m);
    if (z > mpz_class(static_cast<unsigned long>(budget)))
        throw BudgetError("enumeration budget exceeded: Z_" + m.str() + " = " +
                          z.get_str() + " > " + std::to_string(budget));

    CountContext ctx;
    ctx.n = m.total();
    ctx.r = m.rank();
    if (ctx.n > 64) throw std::invalid_argument("count_all: n > 64");
    for (int i = 1; i <= ctx.r; ++i) ctx.box_counts.push_back(m.cumulative(i));

    std::map<Word, std::uint64_t> out;

    // Partition by top-row combination when asked to fan out.
    std::vector<std::uint64_t> top_masks;
    {
        int k = ctx.box_counts[0];
        std::uint64_t mask = first_combination(k);
        std::uint64_t last = last_combination(ctx.n, k);
        while (true) {
            top_masks.push_back(mask);
            if (mask == last) break;
            mask = next_combination(mask);
        }
    }
    threads = std::max(1, std::min<int>(threads, static_cast<int>(top_masks.size())));

    auto run_shard = [&ctx](const std::vector<std::uint64_t>& shard, Tally& tally) {
        std::vector<std::vector<int>> scratch(ctx.r, std::vector<int>(ctx.n, 0));
        for (std::uint64_t top : shard) {
            place_row(top, 1, {}, scratch[0]);
            if (ctx.r == 1) {
                tally.add(scratch[0]);
            } else {
                count_recurse(ctx, 2, sources_of(scratch[0], TieOrder::ColumnAscending),
                              scratch, tally);
            }
        }
    };

    if (threads == 1) {
        Tally tally(ctx.n, ctx.r);
        run_shard(top_masks, tally);
        tally.merge_into(out, ctx.n);
    } else {
        std::vector<std::vector<std::uint64_t>> shards(threads);
        for (std::size_t i = 0; i < top_masks.size(); ++i)
            shards[i % threads].push_back(top_masks[i]);
        std::vector<Tally> tallies(threads, Tally(ctx.n, ctx.r));
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] { run_shard(shards[t], tallies[t]); });
        for (auto& th : pool) th.join();
        for (const Tally& t : tallies) t.merge_into(out, ctx.n);
    }
    return out;
}

std::uint64_t bracket(const Word& u, std::uint64_t budget) {
    TypeVector m = type_of(u);
    m.require_valid();
    auto table = count_all(m, budget);
    auto it = table.find(u);
    return it == table.end() ? 0 : it->second;
}

Mlq beta_alpha_forward(const Mlq& q) {
    if (q.r < 2) throw std::invalid_argument("box move: needs r >= 2");
    if (!q.type().valid())
        throw std::invalid_argument("box move: MLQ type is not strict");
    Word bw = bottom_word(q);
    if (bw.size() < 2 || bw.letter(0) != q.r || bw.letter(1) != q.r - 1)
        throw std::invalid_argument("box move: bottom word of " + bw.str() +
                                    " does not begin beta,alpha");
    if (q.rows[q.r - 2] & 1)
        throw std::logic_error("box move: row r-1 column 1 should be empty");
    if (q.r >= 3 && (q.rows[q.r - 3] & 1))
        throw std::logic_error("box move: row r-2 column 1 should be empty");
    Mlq out = q;
    out.rows[q.r - 2] |= 1;
    return out;
}

Mlq beta_alpha_backward(const Mlq& q) {
    if (q.r < 2) throw std::invalid_argument("box move: needs r >= 2");
    Word bw = bottom_word(q);
    if (bw.size() < 2 || bw.letter(0) != q.r - 1 || bw.letter(1) != q.r - 1)
        throw std::invalid_argument("box move: bottom word of " + bw.str() +
                                    " does not begin alpha,alpha");
    if (!(q.rows[q.r - 2] & 1))
        throw std::invalid_argument("box move: no box at row r-1, column 1");
    Mlq out = q;
    out.rows[q.r - 2] &= ~1ULL;
    return out;
}

}  // namespace mtasep
