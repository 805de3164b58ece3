// Canonical JSON encoding of sparse polynomials.
// Schema: {"domain": "Z"|"GF3"|"GF3m", "m": int (GF3m only), "vars": [names],
//          "terms": [{"e": [exponents], "c": "coefficient string"}]}
// Terms are sorted in the fixed monomial order; files end with a newline so
// equal polynomials always serialize to identical bytes.
#ifndef SIEGEL3_POLY_JSON_HPP
#define SIEGEL3_POLY_JSON_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "siegel3/poly.hpp"

namespace siegel3 {

template <class C>
std::string to_canonical_json(const SparsePoly<C>& p) {
    static_assert(std::is_same_v<C, GF3> || std::is_same_v<C, GF3x> || std::is_same_v<C, ZZ>,
                  "serializable domains: Z, GF3, GF3m");
    nlohmann::ordered_json j;
    j["domain"] = domain_traits<C>::name;
    if constexpr (std::is_same_v<C, GF3x>) j["m"] = 8;
    j["vars"] = p.vars()->names();
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : p.terms()) {
        nlohmann::ordered_json jt;
        jt["e"] = std::vector<uint32_t>(t.m.e.begin(), t.m.e.begin() + t.m.nvars);
        jt["c"] = domain_traits<C>::to_string(t.c);
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j.dump() + "\n";
}

namespace detail {

inline GF3 parse_coeff(const std::string& s, GF3) {
    if (s != "1" && s != "2")
        throw std::invalid_argument("coefficient '" + s + "' not in canonical GF3 form");
    return GF3(static_cast<uint8_t>(s[0] - '0'));
}
inline ZZ parse_coeff(const std::string& s, ZZ) {
    try {
        ZZ v(s);
        if (v == 0) throw std::invalid_argument("zero");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("coefficient '" + s + "' is not a nonzero integer");
    }
}
inline GF3x parse_coeff(const std::string& s, GF3x) {
    unsigned long long n = 0;
    try {
        size_t pos = 0;
        n = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw std::invalid_argument("coefficient '" + s + "' is not a base-3 packed residue");
    }
    GF3x r;
    for (int i = 0; i < 8; ++i) {
        r.c[i] = static_cast<uint8_t>(n % 3);
        n /= 3;
    }
    if (n != 0) throw std::invalid_argument("coefficient '" + s + "' exceeds GF(3^8)");
    if (r.is_zero()) throw std::invalid_argument("zero coefficient stored");
    return r;
}

}  // namespace detail

template <class C>
SparsePoly<C> parse_poly(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("polynomial JSON malformed at byte " +
                                    std::to_string(e.byte) + ": " + e.what());
    }
    try {
        const std::string dom = j.at("domain").get<std::string>();
        if (dom != domain_traits<C>::name)
            throw std::invalid_argument("domain mismatch: file has '" + dom + "', expected '" +
                                        domain_traits<C>::name + "'");
        if constexpr (std::is_same_v<C, GF3x>) {
            if (j.at("m").get<int>() != 8)
                throw std::invalid_argument("unsupported extension degree m (only m=8 built)");
        }
        auto names = j.at("vars").get<std::vector<std::string>>();
        const VarSet* vars = VarSet::intern(names);
        std::vector<std::pair<std::vector<uint32_t>, C>> ts;
        for (const auto& jt : j.at("terms")) {
            auto ev = jt.at("e").get<std::vector<int64_t>>();
            std::vector<uint32_t> e;
            for (int64_t x : ev) {
                if (x < 0 || x > static_cast<int64_t>(kMaxExponent))
                    throw std::invalid_argument("exponent out of range");
                e.push_back(static_cast<uint32_t>(x));
            }
            if (e.size() != names.size())
                throw std::invalid_argument("exponent vector length does not match vars");
            ts.push_back({std::move(e), detail::parse_coeff(jt.at("c").get<std::string>(), C{})});
        }
        return SparsePoly<C>::from_terms(vars, ts);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("polynomial JSON structure invalid: ") + e.what());
    }
}

}  // namespace siegel3

#endif
