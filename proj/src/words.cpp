#include "goldman/words.hpp"

#include "goldman/error.hpp"
#include "goldman/rational.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace goldman {

Letter Letter::make(int generator, int sign) {
    if (generator < 0 || generator > 127 || (sign != 1 && sign != -1))
        throw DomainError("invalid letter");
    return Letter{static_cast<std::uint8_t>(2 * generator + (sign < 0 ? 1 : 0))};
}

FreeWord freely_reduce(const FreeWord& w) {
    FreeWord out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (!out.empty() && out.back() == l.inverse())
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

FreeWord inverse_word(const FreeWord& w) {
    FreeWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

FreeWord reduced_concat(const FreeWord& a, const FreeWord& b) {
    FreeWord out = a;
    for (Letter l : b) {
        if (!out.empty() && out.back() == l.inverse())
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

FreeWord word_power(const FreeWord& w, int m) {
    FreeWord base = m >= 0 ? w : inverse_word(w);
    int n = m >= 0 ? m : -m;
    FreeWord out;
    for (int i = 0; i < n; ++i) out = reduced_concat(out, base);
    return out;
}

bool word_less(const FreeWord& a, const FreeWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string word_to_string(const FreeWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        char base = static_cast<char>((w[i].sign() > 0 ? 'a' : 'A') + w[i].generator());
        out += base;
    }
    return out;
}

FreeWord parse_word(std::string_view text, int rank) {
    FreeWord out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;  // explicit trivial word
        char c = tok[0];
        int gen, sign;
        if (c >= 'a' && c <= 'z') {
            gen = c - 'a';
            sign = +1;
        } else if (c >= 'A' && c <= 'Z') {
            gen = c - 'A';
            sign = -1;
        } else {
            throw DomainError("malformed word token '" + tok + "'");
        }
        if (rank >= 0 && gen >= rank)
            throw DomainError("letter '" + tok + "' out of range for rank " +
                              std::to_string(rank));
        int exp = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^') throw DomainError("malformed word token '" + tok + "'");
            auto [p, ec] = std::from_chars(tok.data() + 2, tok.data() + tok.size(), exp);
            if (ec != std::errc{} || p != tok.data() + tok.size())
                throw DomainError("malformed exponent in token '" + tok + "'");
        }
        if (exp < 0) {
            sign = -sign;
            exp = -exp;
        }
        for (int i = 0; i < exp; ++i) out.push_back(Letter::make(gen, sign));
    }
    return freely_reduce(out);
}

namespace {

// Booth's least-rotation algorithm on the letter codes.
std::size_t least_rotation_index(const FreeWord& s) {
    const std::size_t n = s.size();
    if (n <= 1) return 0;
    auto at = [&](std::size_t i) { return s[i % n].code; };
    std::vector<long> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        std::uint8_t sj = at(j);
        long i = f[j - k - 1];
        while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
            if (sj < at(k + static_cast<std::size_t>(i) + 1))
                k = j - static_cast<std::size_t>(i) - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != at(k)) {
            if (sj < at(k)) k = j;
            f[j - k] = -1;
        } else if (i == -1) {
            f[j - k] = 0;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

FreeWord cyclically_reduce(FreeWord w) {
    w = freely_reduce(w);
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    return FreeWord(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi));
}

}  // namespace

CyclicWord CyclicWord::from_letters(const FreeWord& letters) {
    FreeWord r = cyclically_reduce(letters);
    std::size_t k = least_rotation_index(r);
    CyclicWord out;
    out.letters_.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out.letters_.push_back(r[(k + i) % r.size()]);
    return out;
}

CyclicWord CyclicWord::parse(std::string_view text, int rank) {
    return from_letters(parse_word(text, rank));
}

int CyclicWord::max_generator() const {
    int m = -1;
    for (Letter l : letters_) m = std::max(m, l.generator());
    return m;
}

CyclicWord CyclicWord::inverse() const { return from_letters(inverse_word(letters_)); }

CyclicWord CyclicWord::power(int m) const {
    if (m < 0) throw DomainError("negative power of a cyclic word");
    FreeWord out;
    out.reserve(letters_.size() * static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
    return from_letters(out);
}

bool CyclicWord::is_reversible() const { return *this == inverse(); }

std::pair<CyclicWord, int> CyclicWord::primitive_root() const {
    const std::size_t n = letters_.size();
    if (n == 0) return {CyclicWord{}, 1};
    for (std::size_t p = 1; p <= n / 2; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = 0; i + p < n && periodic; ++i)
            periodic = letters_[i] == letters_[i + p];
        if (periodic) {
            FreeWord root(letters_.begin(), letters_.begin() + static_cast<long>(p));
            return {from_letters(root), static_cast<int>(n / p)};
        }
    }
    return {*this, 1};
}

std::vector<long long> CyclicWord::exponent_sums(int rank) const {
    std::vector<long long> sums(static_cast<std::size_t>(rank), 0);
    for (Letter l : letters_) {
        if (l.generator() >= rank) throw DomainError("word exceeds rank");
        sums[static_cast<std::size_t>(l.generator())] += l.sign();
    }
    return sums;
}

CyclicWord CyclicWord::tilde_rep() const {
    CyclicWord inv = inverse();
    return *this <= inv ? *this : inv;
}

std::pair<CyclicWord, int> CyclicWord::under_rep() const {
    CyclicWord inv = inverse();
    if (inv < *this) return {inv, -1};
    return {*this, +1};
}

std::string CyclicWord::str() const { return word_to_string(letters_); }

bool classes_equal_tilde(const CyclicWord& v, const CyclicWord& w) {
    return v == w || v == w.inverse();
}

UnderRelation classes_equal_under(const CyclicWord& v, const CyclicWord& w) {
    if (v == w) return UnderRelation::Equal;
    if (v == w.inverse()) return UnderRelation::Negated;
    return UnderRelation::Distinct;
}

std::vector<FreeWord> enumerate_reduced_words(int rank, int max_len) {
    std::vector<FreeWord> out;
    FreeWord cur;
    auto rec = [&](auto&& self) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int code = 0; code < 2 * rank; ++code) {
            Letter l{static_cast<std::uint8_t>(code)};
            if (!cur.empty() && cur.back() == l.inverse()) continue;
            cur.push_back(l);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::vector<CyclicWord> enumerate_classes(int rank, int max_len) {
    std::vector<CyclicWord> out;
    for (const FreeWord& w : enumerate_reduced_words(rank, max_len)) {
        CyclicWord c = CyclicWord::from_letters(w);
        if (!c.trivial() && static_cast<int>(c.length()) <= max_len) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CyclicWord random_cyclic_word(std::mt19937& rng, int rank, int min_len, int max_len) {
    std::uniform_int_distribution<int> len_dist(min_len, max_len);
    std::uniform_int_distribution<int> code_dist(0, 2 * rank - 1);
    for (;;) {
        int len = len_dist(rng);
        FreeWord w;
        for (int i = 0; i < len; ++i) {
            Letter l{static_cast<std::uint8_t>(code_dist(rng))};
            if (!w.empty() && w.back() == l.inverse()) {
                --i;
                continue;
            }
            w.push_back(l);
        }
        CyclicWord c = CyclicWord::from_letters(w);
        if (!c.trivial() && static_cast<int>(c.length()) >= min_len) return c;
    }
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(boost::multiprecision::cpp_int(text));
        boost::multiprecision::cpp_int num(text.substr(0, slash));
        boost::multiprecision::cpp_int den(text.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw DomainError("malformed rational '" + text + "'");
    }
}

}  // namespace goldman
