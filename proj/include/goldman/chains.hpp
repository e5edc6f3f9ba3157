#pragma once

#include "goldman/rational.hpp"
#include "goldman/words.hpp"

#include <map>
#include <string>
#include <utility>

namespace goldman {

// Key normalization policies for the three coefficient spaces: directed
// classes, undirected classes (w identified with iota w), and sign-twisted
// undirected classes (iota w identified with -w).

struct HatPolicy {
    // (canonical key, coefficient multiplier); multiplier 0 drops the term.
    static std::pair<CyclicWord, int> normalize(const CyclicWord& w) { return {w, 1}; }
    static constexpr const char* tag = "hat";
};

struct TildePolicy {
    static std::pair<CyclicWord, int> normalize(const CyclicWord& w) {
        return {w.tilde_rep(), 1};
    }
    static constexpr const char* tag = "tilde";
};

struct UnderPolicy {
    static std::pair<CyclicWord, int> normalize(const CyclicWord& w) {
        // The trivial class equals its own inverse, so it is killed by the
        // sign twist.
        if (w.trivial()) return {w, 0};
        return w.under_rep();
    }
    static constexpr const char* tag = "under";
};

// Finite rational linear combination of classes, keys kept normalized.
template <class Policy>
class BasicChain {
public:
    using Map = std::map<CyclicWord, Rational>;

    BasicChain() = default;
    explicit BasicChain(const CyclicWord& w, Rational c = 1) { add(w, std::move(c)); }

    void add(const CyclicWord& w, const Rational& c) {
        auto [key, mult] = Policy::normalize(w);
        if (mult == 0 || c == 0) return;
        Rational& slot = terms_[key];
        slot += mult * c;
        if (slot == 0) terms_.erase(key);
    }

    BasicChain& operator+=(const BasicChain& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    BasicChain& operator-=(const BasicChain& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    BasicChain& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend BasicChain operator+(BasicChain a, const BasicChain& b) { return a += b; }
    friend BasicChain operator-(BasicChain a, const BasicChain& b) { return a -= b; }
    friend BasicChain operator*(const Rational& s, BasicChain a) { return a *= s; }
    BasicChain operator-() const {
        BasicChain out = *this;
        for (auto& [w, c] : out.terms_) c = -c;
        return out;
    }

    bool zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    Rational coeff(const CyclicWord& w) const {
        auto [key, mult] = Policy::normalize(w);
        if (mult == 0) return 0;
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : Rational(mult * it->second);
    }

    bool operator==(const BasicChain&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + rational_to_string(c) + ")*[" +
                   (w.trivial() ? "1" : w.str()) + "]";
        }
        return out;
    }

private:
    Map terms_;
};

using ChainHat = BasicChain<HatPolicy>;      // directed classes
using ChainTilde = BasicChain<TildePolicy>;  // undirected classes
using ChainUnder = BasicChain<UnderPolicy>;  // sign-twisted classes

ChainHat iota_chain(const ChainHat& x);
// Projections onto the (+1)/(-1) eigenspaces of iota: (x +- iota x)/2.
ChainHat project_plus(const ChainHat& x);
ChainHat project_minus(const ChainHat& x);

ChainTilde to_tilde(const ChainHat& x);
ChainUnder to_under(const ChainHat& x);

// JSON array [{"class": "...", "coeff": "p/q"}, ...] in key order;
// deterministic byte-for-byte for equal chains.
template <class Policy>
std::string chain_to_json(const BasicChain<Policy>& x);

std::string class_to_json_string(const CyclicWord& w);

}  // namespace goldman
