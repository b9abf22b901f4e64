#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mtasep {

/// A finite word over the alphabet {1, 2, ...}. Positions are 0-based in
/// code; documentation and serialized forms use 1-based positions, with
/// "left of position 1" meaning position n (cyclic).
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    /// Parses "1423" (digit form, all letters <= 9) or "10,2,3".
    static Word parse(const std::string& text);

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int letter(int pos) const { return letters_[pos]; }
    int max_letter() const;
    const std::vector<int>& letters() const { return letters_; }

    /// Digit string when all letters <= 9, comma-separated otherwise.
    std::string str() const;

    Word rotated(int shift) const;

    auto operator<=>(const Word&) const = default;

private:
    std::vector<int> letters_;
};

/// Occurrence counts (m_1,...,m_r) of the letters of a word. Strict mode
/// demands every entry positive; relaxed mode additionally admits trailing
/// zeros (produced only by the beta-alpha box move). The mode is an
/// explicit flag, never inferred from the counts.
class TypeVector {
public:
    enum class Mode { Strict, Relaxed };

    TypeVector() = default;
    explicit TypeVector(std::vector<int> counts, Mode mode = Mode::Strict);

    /// Parses "1,1,2".
    static TypeVector parse(const std::string& text, Mode mode = Mode::Strict);

    const std::vector<int>& counts() const { return counts_; }
    int count(int letter) const { return counts_[letter - 1]; }
    int rank() const { return static_cast<int>(counts_.size()); }  // r
    int total() const;                                             // n
    Mode mode() const { return mode_; }

    /// m_1 + ... + m_i, the box count of MLQ row i (1-based).
    int cumulative(int i) const;

    bool valid() const;
    void require_valid() const;  // throws std::invalid_argument

    std::string str() const;

    bool operator==(const TypeVector& o) const { return counts_ == o.counts_; }
    bool operator<(const TypeVector& o) const { return counts_ < o.counts_; }

private:
    std::vector<int> counts_;
    Mode mode_ = Mode::Strict;
};

/// Occurrence counts of w; entry i counts letter i, r = max letter of w.
/// The result claims strict mode but is not validated here; operations
/// with a strict precondition reject it if some smaller letter is absent.
TypeVector type_of(const Word& w);

/// The sorted word 1^{m_1} 2^{m_2} ... r^{m_r}. Requires strict m.
Word sorted_word(const TypeVector& m);

/// All n rotations of w, starting with w itself.
std::vector<Word> cyclic_shifts(const Word& w);

/// Lexicographically least rotation; canonical representative of the
/// cyclic class of w.
Word canonical_rotation(const Word& w);

/// Replaces every occurrence of the top letter r by r-1. Strict mode
/// requires type_of(w) to be strict (all of 1..r present) so that the
/// merge lands on an existing letter; relaxed mode only requires r >= 2.
Word merge_top(const Word& w, TypeVector::Mode mode = TypeVector::Mode::Strict);

/// Replaces each letter i by r+1-i and reverses; an involution. The type
/// of the output is the reverse of the type of the input.
Word reverse_complement(const Word& w, int r);

/// Concatenation u.v.
Word concat(const Word& u, const Word& v);

/// All words of the given strict type, in lexicographic order. The count
/// is the multinomial coefficient; callers enforcing a cap should check
/// it first via multinomial().
std::vector<Word> words_of_type(const TypeVector& m);

// Two-letter suffix machinery. The letters alpha and beta are concretely
// encoded as r-1 and r of an enclosing alphabet; r defaults to 2 so the
// standalone encoding is {1, 2}.

/// E_b: all C(length, b) words of the given length over {alpha, beta}
/// with exactly b occurrences of beta, in lexicographic order.
std::vector<Word> enumerate_suffixes(int length, int b, int r = 2);

/// e^{(b)}: the unique sorted word in E_b, alpha^{length-b} beta^b.
Word sorted_suffix(int length, int b, int r = 2);

/// (f(v), g(v)): f turns every non-trailing beta into alpha, g counts the
/// betas that survive. f(v) = e^{(g(v))} and f is idempotent.
std::pair<Word, int> collapse_nontrailing(const Word& v, int r = 2);

}  // namespace mtasep
