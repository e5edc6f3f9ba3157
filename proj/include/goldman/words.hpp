#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace goldman {

// One generator or its inverse. Code layout: 2*i for a_i, 2*i+1 for
// a_i^{-1}, so the natural code order is a < a^{-1} < b < b^{-1} < ...,
// which is the letter order used for canonical rotations.
struct Letter {
    std::uint8_t code = 0;

    static Letter make(int generator, int sign);

    int generator() const { return code >> 1; }
    int sign() const { return (code & 1) ? -1 : +1; }
    Letter inverse() const { return Letter{static_cast<std::uint8_t>(code ^ 1)}; }

    auto operator<=>(const Letter&) const = default;
};

// A linear (non-cyclic) word in the free group; not necessarily reduced.
using FreeWord = std::vector<Letter>;

FreeWord freely_reduce(const FreeWord& w);
FreeWord inverse_word(const FreeWord& w);
// Free reduction of the concatenation a.b.
FreeWord reduced_concat(const FreeWord& a, const FreeWord& b);
FreeWord word_power(const FreeWord& w, int m);  // m may be negative

// (length, lex) order on reduced words; total on distinct elements.
bool word_less(const FreeWord& a, const FreeWord& b);

std::string word_to_string(const FreeWord& w);
// Grammar: whitespace-separated letters, lowercase = generator, uppercase =
// inverse, optional ^k with integer k ("a b A B", "a^3 b^-1").
// rank < 0 disables the range check.
FreeWord parse_word(std::string_view text, int rank = -1);

// A conjugacy class in the free group: cyclically reduced word stored in
// its lexicographically least rotation.
class CyclicWord {
public:
    CyclicWord() = default;  // the trivial class 1

    static CyclicWord from_letters(const FreeWord& letters);
    static CyclicWord parse(std::string_view text, int rank = -1);

    const FreeWord& letters() const { return letters_; }
    bool trivial() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }
    // Largest generator index appearing, -1 for the trivial class.
    int max_generator() const;

    CyclicWord inverse() const;       // the involution iota
    CyclicWord power(int m) const;    // m >= 0; m = 0 gives the trivial class

    // True iff the class is conjugate to its own inverse. In a free group
    // this holds only for the trivial class; the operation is the exact
    // combinatorial oracle the matrix-level scan is compared against.
    bool is_reversible() const;

    // (root, exponent) with *this == root^exponent, root primitive.
    std::pair<CyclicWord, int> primitive_root() const;

    std::vector<long long> exponent_sums(int rank) const;

    // Representative of the undirected class: min(w, iota w).
    CyclicWord tilde_rep() const;
    // (rep, sign) for the sign-twisted class: rep = min(w, iota w) and
    // sign = -1 when the minimum is iota w != w.
    std::pair<CyclicWord, int> under_rep() const;

    std::string str() const;

    bool operator==(const CyclicWord&) const = default;
    std::strong_ordering operator<=>(const CyclicWord& o) const {
        if (letters_.size() != o.letters_.size())
            return letters_.size() <=> o.letters_.size();
        for (std::size_t i = 0; i < letters_.size(); ++i)
            if (letters_[i].code != o.letters_[i].code)
                return letters_[i].code <=> o.letters_[i].code;
        return std::strong_ordering::equal;
    }

private:
    FreeWord letters_;
};

bool classes_equal_tilde(const CyclicWord& v, const CyclicWord& w);

enum class UnderRelation { Equal, Negated, Distinct };
UnderRelation classes_equal_under(const CyclicWord& v, const CyclicWord& w);

// All distinct nontrivial classes of length in [1, max_len], sorted.
std::vector<CyclicWord> enumerate_classes(int rank, int max_len);

// All reduced linear words of length in [1, max_len].
std::vector<FreeWord> enumerate_reduced_words(int rank, int max_len);

// Uniform-ish random nontrivial cyclic word with length in [min_len, max_len].
CyclicWord random_cyclic_word(std::mt19937& rng, int rank, int min_len, int max_len);

}  // namespace goldman
