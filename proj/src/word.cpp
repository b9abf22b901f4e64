#include "mtasep/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mtasep {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int l : letters_)
        if (l < 1) throw std::invalid_argument("word letters must be >= 1");
}

Word Word::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty word");
    std::vector<int> letters;
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string::npos) comma = text.size();
            letters.push_back(std::stoi(text.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("bad letter '" + std::string(1, c) +
                                            "' in word \"" + text + "\"");
            letters.push_back(c - '0');
        }
    }
    return Word(std::move(letters));
}

int Word::max_letter() const {
    int m = 0;
    for (int l : letters_) m = std::max(m, l);
    return m;
}

std::string Word::str() const {
    bool digits = std::all_of(letters_.begin(), letters_.end(),
                              [](int l) { return l <= 9; });
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!digits && i > 0) out += ',';
        out += std::to_string(letters_[i]);
    }
    return out;
}

Word Word::rotated(int shift) const {
    int n = size();
    if (n == 0) return *this;
    shift = ((shift % n) + n) % n;
    std::vector<int> out(letters_.begin() + shift, letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + shift);
    return Word(std::move(out));
}

TypeVector::TypeVector(std::vector<int> counts, Mode mode)
    : counts_(std::move(counts)), mode_(mode) {
    for (int c : counts_)
        if (c < 0) throw std::invalid_argument("type counts must be >= 0");
}

TypeVector TypeVector::parse(const std::string& text, Mode mode) {
    if (text.empty()) throw std::invalid_argument("empty type vector");
    std::vector<int> counts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        counts.push_back(std::stoi(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return TypeVector(std::move(counts), mode);
}

int TypeVector::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

int TypeVector::cumulative(int i) const {
    int c = 0;
    for (int j = 0; j < i; ++j) c += counts_[j];
    return c;
}

bool TypeVector::valid() const {
    if (counts_.empty()) return false;
    if (mode_ == Mode::Strict) {
        for (int c : counts_)
            if (c == 0) return false;
        return true;
    }
    // Relaxed: zeros allowed only as a trailing run.
    std::size_t last_nonzero = 0;
    bool any = false;
    for (std::size_t i = 0; i < counts_.size(); ++i)
        if (counts_[i] > 0) { last_nonzero = i; any = true; }
    if (!any) return false;
    for (std::size_t i = 0; i < last_nonzero; ++i)
        if (counts_[i] == 0) return false;
    return true;
}

void TypeVector::require_valid() const {
    if (!valid())
        throw std::invalid_argument(
            "invalid type vector (" + str() +
            (mode_ == Mode::Strict ? "): strict mode forbids zero entries"
                                   : "): zeros must be trailing"));
}

std::string TypeVector::str() const {
    std::string out;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(counts_[i]);
    }
    return out;
}

TypeVector type_of(const Word& w) {
    if (w.empty()) throw std::invalid_argument("type_of: empty word");
    std::vector<int> counts(w.max_letter(), 0);
    for (int l : w.letters()) counts[l - 1]++;
    return TypeVector(std::move(counts));
}

Word sorted_word(const TypeVector& m) {
    m.require_valid();
    std::vector<int> letters;
    letters.reserve(m.total());
    for (int i = 1; i <= m.rank(); ++i)
        letters.insert(letters.end(), m.count(i), i);
    return Word(std::move(letters));
}

std::vector<Word> cyclic_shifts(const Word& w) {
    std::vector<Word> out;
    out.reserve(w.size());
    for (int s = 0; s < w.size(); ++s) out.push_back(w.rotated(s));
    return out;
}

Word canonical_rotation(const Word& w) {
    Word best = w;
    for (int s = 1; s < w.size(); ++s) {
        Word cand = w.rotated(s);
        if (cand < best) best = cand;
    }
    return best;
}

Word merge_top(const Word& w, TypeVector::Mode mode) {
    int r = w.max_letter();
    if (r < 2) throw std::invalid_argument("merge_top: top letter is 1, nothing to merge");
    if (mode == TypeVector::Mode::Strict) {
        TypeVector t = type_of(w);
        if (!t.valid())
            throw std::invalid_argument(
                "merge_top: word " + w.str() + " is not of strict type");
    }
    std::vector<int> letters = w.letters();
    for (int& l : letters)
        if (l == r) l = r - 1;
    return Word(std::move(letters));
}

Word reverse_complement(const Word& w, int r) {
    std::vector<int> letters;
    letters.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        if (*it > r)
            throw std::invalid_argument("reverse_complement: letter exceeds r");
        letters.push_back(r + 1 - *it);
    }
    return Word(std::move(letters));
}

Word concat(const Word& u, const Word& v) {
    std::vector<int> letters = u.letters();
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return Word(std::move(letters));
}

std::vector<Word> words_of_type(const TypeVector& m) {
    m.require_valid();
    std::vector<int> letters = sorted_word(m).letters();
    std::vector<Word> out;
    do {
        out.push_back(Word(letters));
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

std::vector<Word> enumerate_suffixes(int length, int b, int r) {
    if (b < 0 || b > length)
        throw std::invalid_argument("enumerate_suffixes: b out of range");
    if (r < 2) throw std::invalid_argument("enumerate_suffixes: r must be >= 2");
    std::vector<Word> out;
    std::vector<int> letters(length, r - 1);
    // Lexicographic order over {alpha,beta}^length = subsets of beta positions.
    std::vector<int> pos(b);
    for (int i = 0; i < b; ++i) pos[i] = i;
    while (true) {
        std::fill(letters.begin(), letters.end(), r - 1);
        for (int p : pos) letters[p] = r;
        out.push_back(Word(letters));
        if (b == 0) break;
        int i = b - 1;
        while (i >= 0 && pos[i] == length - b + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (int j = i + 1; j < b; ++j) pos[j] = pos[j - 1] + 1;
    }
    return out;
}

Word sorted_suffix(int length, int b, int r) {
    if (b < 0 || b > length)
        throw std::invalid_argument("sorted_suffix: b out of range");
    std::vector<int> letters(length, r - 1);
    for (int i = length - b; i < length; ++i) letters[i] = r;
    return Word(std::move(letters));
}

std::pair<Word, int> collapse_nontrailing(const Word& v, int r) {
    for (int l : v.letters())
        if (l != r - 1 && l != r)
            throw std::invalid_argument(
                "collapse_nontrailing: letter outside {alpha,beta}");
    int trailing = 0;
    for (auto it = v.letters().rbegin(); it != v.letters().rend() && *it == r; ++it)
        ++trailing;
    return {sorted_suffix(v.size(), trailing, r), trailing};
}

}  // namespace mtasep
