#include "goldman/pbw.hpp"

#include "goldman/error.hpp"

#include <json.hpp>

#include <algorithm>

namespace goldman {

BasisClass BasisClass::tilde(const CyclicWord& w) {
    return {Tier::Tilde, w.tilde_rep()};
}

BasisClass BasisClass::under(const CyclicWord& w) {
    if (w.trivial())
        throw DomainError("the trivial class is not a generator of the under tier");
    return {Tier::Under, w.under_rep().first};
}

std::string BasisClass::str() const {
    std::string body = rep.trivial() ? "1" : rep.str();
    return (tier == Tier::Tilde ? "tilde(" : "under(") + body + ")";
}

PBWMonomial normalize_monomial(PBWMonomial m) {
    std::sort(m.begin(), m.end());
    return m;
}

bool MonomialLess::operator()(const PBWMonomial& a, const PBWMonomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PBWElement PBWElement::scalar(Rational c) {
    PBWElement out;
    out.add({}, c);
    return out;
}

PBWElement PBWElement::monomial(PBWMonomial m, Rational c) {
    PBWElement out;
    out.add(std::move(m), c);
    return out;
}

void PBWElement::add(const PBWMonomial& m, const Rational& c) {
    if (c == 0) return;
    PBWMonomial key = normalize_monomial(m);
    Rational& slot = terms_[key];
    slot += c;
    if (slot == 0) terms_.erase(key);
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

PBWElement& PBWElement::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

std::string PBWElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + rational_to_string(c) + ")";
        for (const auto& f : m) out += "*" + f.str();
    }
    return out;
}

std::string PBWElement::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& f : m)
            factors.push_back(
                {{"class", class_to_json_string(f.rep)},
                 {"tier", f.tier == BasisClass::Tier::Tilde ? "tilde" : "under"}});
        arr.push_back({{"coeff", rational_to_string(c)}, {"factors", factors}});
    }
    return arr.dump();
}

PBWElement pbw_product(const PBWElement& x, const PBWElement& y) {
    PBWElement out;
    for (const auto& [m, cm] : x.terms())
        for (const auto& [n, cn] : y.terms()) {
            PBWMonomial prod = m;
            prod.insert(prod.end(), n.begin(), n.end());
            out.add(prod, cm * cn);
        }
    return out;
}

PBWElement pbw_from_tilde(const ChainTilde& x) {
    PBWElement out;
    for (const auto& [w, c] : x.terms())
        out.add({BasisClass{BasisClass::Tier::Tilde, w}}, c);
    return out;
}

PBWElement pbw_from_under(const ChainUnder& x) {
    PBWElement out;
    for (const auto& [w, c] : x.terms())
        out.add({BasisClass{BasisClass::Tier::Under, w}}, c);
    return out;
}

PBWElement twg_basis_bracket(BracketEngine& engine, const BasisClass& x,
                             const BasisClass& y) {
    using Tier = BasisClass::Tier;
    if (x.tier == Tier::Tilde && y.tier == Tier::Tilde)
        return pbw_from_tilde(engine.twg_tilde_tilde(x.rep, y.rep));
    if (x.tier == Tier::Tilde && y.tier == Tier::Under)
        return pbw_from_under(engine.twg_tilde_under(x.rep, y.rep));
    if (x.tier == Tier::Under && y.tier == Tier::Tilde)
        return pbw_from_under(engine.twg_under_tilde(x.rep, y.rep));
    return pbw_from_tilde(engine.twg_under_under(x.rep, y.rep));
}

PBWElement deformed_bracket_basis(BracketEngine& engine, const BasisClass& x,
                                  const BasisClass& y, const Rational& k) {
    PBWElement out = twg_basis_bracket(engine, x, y);
    if (k == 0 || x.rep.trivial() || y.rep.trivial()) return out;
    auto [rx, ex] = x.rep.primitive_root();
    auto [ry, ey] = y.rep.primitive_root();
    (void)ex;
    (void)ey;
    if (ry == rx || ry == rx.inverse()) return out;  // coinciding axes: n = 0
    int n = engine.algebraic_intersection(x.rep, y.rep);
    if (n == 0) return out;
    using Tier = BasisClass::Tier;
    auto swap_tier = [](const BasisClass& b) {
        return BasisClass{b.tier == Tier::Tilde ? Tier::Under : Tier::Tilde, b.rep};
    };
    out.add({swap_tier(x), swap_tier(y)}, -k * n);
    return out;
}

PBWElement poisson_bracket(BracketEngine& engine, const PBWElement& x,
                           const PBWElement& y, const Rational& k) {
    PBWElement out;
    for (const auto& [m, cm] : x.terms())
        for (const auto& [n, cn] : y.terms())
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = 0; j < n.size(); ++j) {
                    PBWMonomial rest;
                    for (std::size_t t = 0; t < m.size(); ++t)
                        if (t != i) rest.push_back(m[t]);
                    for (std::size_t t = 0; t < n.size(); ++t)
                        if (t != j) rest.push_back(n[t]);
                    PBWElement term = pbw_product(
                        PBWElement::monomial(std::move(rest), cm * cn),
                        deformed_bracket_basis(engine, m[i], n[j], k));
                    out += term;
                }
    return out;
}

namespace {

// Ordered (non-commutative) words with coefficients, the working state of
// the enveloping-algebra rewriting.
using WordMap = std::map<std::vector<BasisClass>, Rational, MonomialLess>;

void word_add(WordMap& map, const std::vector<BasisClass>& w, const Rational& c) {
    if (c == 0) return;
    Rational& slot = map[w];
    slot += c;
    if (slot == 0) map.erase(w);
}

std::vector<std::size_t> descents(const std::vector<BasisClass>& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] < w[i]) out.push_back(i);
    return out;
}

PBWElement normal_form_impl(BracketEngine& engine, const std::vector<BasisClass>& word,
                            std::mt19937* rng) {
    WordMap work;
    word_add(work, word, 1);
    PBWElement out;
    while (!work.empty()) {
        // Words holding a strictly out-of-order adjacent pair.
        std::vector<const std::vector<BasisClass>*> unsorted;
        for (const auto& [w, c] : work)
            if (!descents(w).empty()) unsorted.push_back(&w);
        if (unsorted.empty()) {
            for (const auto& [w, c] : work) out.add(w, c);
            break;
        }
        std::size_t pick = 0;
        if (rng) pick = (*rng)() % unsorted.size();
        std::vector<BasisClass> w = *unsorted[pick];
        Rational c = work.at(w);
        work.erase(w);
        auto ds = descents(w);
        std::size_t i = rng ? ds[(*rng)() % ds.size()] : ds.front();
        // x y = y x + [x, y] with x = w[i] > y = w[i+1].
        std::vector<BasisClass> swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        word_add(work, swapped, c);
        PBWElement br = twg_basis_bracket(engine, w[i], w[i + 1]);
        for (const auto& [mon, cb] : br.terms()) {
            std::vector<BasisClass> shorter(w.begin(), w.begin() + i);
            shorter.insert(shorter.end(), mon.begin(), mon.end());
            shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
            word_add(work, shorter, c * cb);
        }
    }
    return out;
}

}  // namespace

PBWElement uea_normal_form(BracketEngine& engine, const std::vector<BasisClass>& word) {
    return normal_form_impl(engine, word, nullptr);
}

PBWElement uea_normal_form(BracketEngine& engine, const std::vector<BasisClass>& word,
                           std::mt19937& rng) {
    return normal_form_impl(engine, word, &rng);
}

}  // namespace goldman
