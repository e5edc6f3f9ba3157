#include "goldman/chains.hpp"

#include <json.hpp>

namespace goldman {

ChainHat iota_chain(const ChainHat& x) {
    ChainHat out;
    for (const auto& [w, c] : x.terms()) out.add(w.inverse(), c);
    return out;
}

ChainHat project_plus(const ChainHat& x) {
    ChainHat out = x;
    out += iota_chain(x);
    out *= Rational(1, 2);
    return out;
}

ChainHat project_minus(const ChainHat& x) {
    ChainHat out = x;
    out -= iota_chain(x);
    out *= Rational(1, 2);
    return out;
}

ChainTilde to_tilde(const ChainHat& x) {
    ChainTilde out;
    for (const auto& [w, c] : x.terms()) out.add(w, c);
    return out;
}

ChainUnder to_under(const ChainHat& x) {
    ChainUnder out;
    for (const auto& [w, c] : x.terms()) out.add(w, c);
    return out;
}

std::string class_to_json_string(const CyclicWord& w) {
    return w.trivial() ? std::string("1") : w.str();
}

template <class Policy>
std::string chain_to_json(const BasicChain<Policy>& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, c] : x.terms()) {
        arr.push_back({{"class", class_to_json_string(w)},
                       {"coeff", rational_to_string(c)}});
    }
    return arr.dump();
}

template std::string chain_to_json<HatPolicy>(const ChainHat&);
template std::string chain_to_json<TildePolicy>(const ChainTilde&);
template std::string chain_to_json<UnderPolicy>(const ChainUnder&);

}  // namespace goldman
