// The graded ring F3[psi2, chi10, psi12, chi14, chi36] modulo the weight-42
// relation: Hilbert series, monomial bases, dimension counting, expression of
// invariants in the generators, and the weight-70 polynomial P with
// chi35^2 = P.
#ifndef SIEGEL3_GENRING_HPP
#define SIEGEL3_GENRING_HPP

#include <functional>
#include <map>
#include <mutex>

#include "siegel3/rng.hpp"
#include "siegel3/valuation.hpp"

namespace siegel3 {

inline constexpr std::array<uint32_t, 5> kGenWeights = {2, 10, 12, 14, 36};
inline constexpr std::array<const char*, 5> kGenNames = {"psi2", "chi10", "psi12", "chi14",
                                                         "chi36"};

// ---------------------------------------------------------------------------
// Hilbert series of (1 - t^42) / ((1-t^2)(1-t^10)(1-t^12)(1-t^14)(1-t^36))
// ---------------------------------------------------------------------------

// coefficient of t^k, exact integer arithmetic; negative k gives 0
inline int64_t hilbert_r(int64_t k) {
    if (k < 0) return 0;
    if (k % 2) throw std::invalid_argument("hilbert_r: odd weight rejected");
    static std::mutex mu;
    static std::vector<int64_t> partial;  // partition counts by the 5 generator degrees
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<size_t>(k) + 1 > partial.size()) {
        size_t n = static_cast<size_t>(k) + 64;
        partial.assign(n, 0);
        partial[0] = 1;
        for (uint32_t d : kGenWeights)
            for (size_t i = d; i < n; ++i) partial[i] += partial[i - d];
    }
    int64_t r = partial[static_cast<size_t>(k)];
    if (k >= 42) r -= partial[static_cast<size_t>(k - 42)];
    return r;
}

// dim M_k(Gamma_1) in characteristic 3 = floor(k/12) + 1 for even k >= 0
inline int64_t dim_level1(int64_t k) {
    if (k < 0 || k % 2) throw std::invalid_argument("dim_level1: even k >= 0 required");
    return k / 12 + 1;
}

// odd weights: multiplication by chi35 gives r(k) = hilbert_r(k - 35)
inline int64_t hilbert_r_odd(int64_t k) {
    if (k % 2 == 0) throw std::invalid_argument("hilbert_r_odd: odd weight expected");
    return k >= 35 ? hilbert_r(k - 35) : 0;
}

// leading coefficient of r(k) as a cubic in k over even k, derived from the
// series: 42/(2*10*12*14*36 * 3!) doubled because odd coefficients vanish
inline QQ series_leading_coefficient() {
    return QQ(2) * QQ(42) / (QQ(2) * 10 * 12 * 14 * 36 * QQ(6));
}

// ---------------------------------------------------------------------------
// monomials in the generators
// ---------------------------------------------------------------------------

struct GenMonomial {
    std::array<uint32_t, 5> e{};  // exponents of (psi2, chi10, psi12, chi14, chi36)

    uint64_t weight() const {
        uint64_t w = 0;
        for (size_t i = 0; i < 5; ++i) w += static_cast<uint64_t>(kGenWeights[i]) * e[i];
        return w;
    }
    auto operator<=>(const GenMonomial&) const = default;
};

inline std::string gen_monomial_to_string(const GenMonomial& g, bool with_chi35 = false) {
    std::string s;
    for (size_t i = 0; i < 5; ++i) {
        if (!g.e[i]) continue;
        if (!s.empty()) s += "*";
        s += kGenNames[i];
        if (g.e[i] > 1) s += "^" + std::to_string(g.e[i]);
    }
    if (with_chi35) s = s.empty() ? "chi35" : "chi35*" + s;
    return s.empty() ? "1" : s;
}

// all weight-k monomials, optionally restricted (the module basis takes
// chi14-exponent <= 2 in view of the weight-42 relation)
inline std::vector<GenMonomial> weight_monomials(uint64_t k, std::optional<uint32_t> chi14_cap) {
    std::vector<GenMonomial> out;
    for (uint32_t e5 = 0; 36ull * e5 <= k; ++e5)
        for (uint32_t e4 = 0; 36ull * e5 + 14ull * e4 <= k; ++e4) {
            if (chi14_cap && e4 > *chi14_cap) continue;
            for (uint32_t e3 = 0; 36ull * e5 + 14ull * e4 + 12ull * e3 <= k; ++e3)
                for (uint32_t e2 = 0; 36ull * e5 + 14ull * e4 + 12ull * e3 + 10ull * e2 <= k;
                     ++e2) {
                    uint64_t rem = k - 36ull * e5 - 14ull * e4 - 12ull * e3 - 10ull * e2;
                    if (rem % 2) continue;
                    GenMonomial g;
                    g.e = {static_cast<uint32_t>(rem / 2), e2, e3, e4, e5};
                    out.push_back(g);
                }
        }
    std::sort(out.begin(), out.end());
    return out;
}

// the monomial basis of weight k (chi14-exponent <= 2); its size must agree
// with the Hilbert coefficient, which is checked on every call
inline std::vector<GenMonomial> basis_monomials(uint64_t k) {
    auto out = weight_monomials(k, 2);
    int64_t expect = hilbert_r(static_cast<int64_t>(k));
    if (static_cast<int64_t>(out.size()) != expect)
        throw std::logic_error("basis_monomials: count " + std::to_string(out.size()) +
                               " disagrees with Hilbert coefficient " + std::to_string(expect) +
                               " at weight " + std::to_string(k));
    return out;
}

// ---------------------------------------------------------------------------
// polynomials in the generators
// ---------------------------------------------------------------------------

struct FormPoly {
    std::map<GenMonomial, GF3> terms;
    bool with_chi35{false};  // odd-weight elements carry one chi35 factor

    bool is_zero() const { return terms.empty(); }

    void add_term(const GenMonomial& g, GF3 c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.try_emplace(g, GF3(0));
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }

    std::optional<uint64_t> weight() const {
        std::optional<uint64_t> w;
        for (const auto& [g, c] : terms) {
            uint64_t gw = g.weight() + (with_chi35 ? 35 : 0);
            if (!w)
                w = gw;
            else if (*w != gw)
                return std::nullopt;
        }
        return w;
    }

    friend bool operator==(const FormPoly& a, const FormPoly& b) {
        return a.with_chi35 == b.with_chi35 && a.terms == b.terms;
    }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [g, c] : terms) {
            if (!s.empty()) s += " + ";
            s += std::to_string(int(c.v)) + "*" + gen_monomial_to_string(g, with_chi35);
        }
        return s;
    }
};

// the invariant A^e1 D^e2 S^e3 (BD)^e4 (CD^3)^e5, times E D^2 for chi35
inline PolyGF3 monomial_to_invariant(const GenMonomial& g, const NamedInvariants& inv,
                                     bool with_chi35 = false) {
    PolyGF3 r = inv.A.pow(g.e[0]);
    uint64_t dpow = static_cast<uint64_t>(g.e[1]) + g.e[3] + 3ull * g.e[4];
    if (with_chi35) dpow += 2;
    if (dpow) r *= inv.D.pow(dpow);
    if (g.e[2]) r *= inv.S.pow(g.e[2]);
    if (g.e[3]) r *= inv.B.pow(g.e[3]);
    if (g.e[4]) r *= inv.C.pow(g.e[4]);
    if (with_chi35) r *= inv.E;
    return r;
}

inline PolyGF3 formpoly_image(const FormPoly& f, const NamedInvariants& inv) {
    PolyGF3 acc = PolyGF3::zero(VarSet::invariant());
    for (const auto& [g, c] : f.terms)
        acc += monomial_to_invariant(g, inv, f.with_chi35).scaled(c);
    return acc;
}

// ---------------------------------------------------------------------------
// expression in the generators by seeded evaluation + verification
// ---------------------------------------------------------------------------

struct GenValues {
    GF3x A, B, C, D, S, E;
};

inline GenValues evaluate_generators(const NamedInvariants& inv, const std::vector<GF3x>& pt) {
    return {inv.A.evaluate(pt), inv.B.evaluate(pt), inv.C.evaluate(pt),
            inv.D.evaluate(pt), inv.S.evaluate(pt), inv.E.evaluate(pt)};
}

inline GF3x gen_monomial_value(const GenMonomial& g, const GenValues& v) {
    GF3x r = v.A.pow(g.e[0]);
    uint64_t dpow = static_cast<uint64_t>(g.e[1]) + g.e[3] + 3ull * g.e[4];
    if (dpow) r = r * v.D.pow(dpow);
    if (g.e[2]) r = r * v.S.pow(g.e[2]);
    if (g.e[3]) r = r * v.B.pow(g.e[3]);
    if (g.e[4]) r = r * v.C.pow(g.e[4]);
    return r;
}

struct ExpressOptions {
    uint64_t seed = kDefaultSeed;
    size_t oversample = 64;
    int retries = 8;
    size_t exact_verify_term_cap = 300000;  // symbolic check below this target size
    size_t extra_eval_checks = 256;         // otherwise this many more random points
    bool force_exact_verify = false;
};

namespace detail {

enum class SolveKind { unique, inconsistent, underdetermined };

struct SolveResult {
    SolveKind kind;
    std::vector<GF3x> x;
};

// dense Gaussian elimination over GF(3^8) on an augmented system
inline SolveResult solve_gf3x(std::vector<std::vector<GF3x>>& rows, size_t ncols) {
    size_t nrows = rows.size();
    std::vector<size_t> pivot_of_col(ncols, SIZE_MAX);
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < nrows; ++c) {
        size_t pr = SIZE_MAX;
        for (size_t i = r; i < nrows; ++i)
            if (!rows[i][c].is_zero()) {
                pr = i;
                break;
            }
        if (pr == SIZE_MAX) continue;
        std::swap(rows[r], rows[pr]);
        GF3x inv = rows[r][c].inverse();
        for (size_t j = c; j <= ncols; ++j) rows[r][j] = rows[r][j] * inv;
        for (size_t i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            GF3x f = rows[i][c];
            for (size_t j = c; j <= ncols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_of_col[c] = r;
        ++r;
    }
    for (size_t i = r; i < nrows; ++i)
        if (!rows[i][ncols].is_zero()) return {SolveKind::inconsistent, {}};
    for (size_t c = 0; c < ncols; ++c)
        if (pivot_of_col[c] == SIZE_MAX) return {SolveKind::underdetermined, {}};
    std::vector<GF3x> x(ncols);
    for (size_t c = 0; c < ncols; ++c) x[c] = rows[pivot_of_col[c]][ncols];
    return {SolveKind::unique, std::move(x)};
}

}  // namespace detail

// Solves for the unique combination of `monos` whose invariant image matches
// the target, sampling seeded points in GF(3^8)^7. The candidate is certified
// either by exact symbolic expansion (small targets or force_exact_verify) or
// by extra independent evaluations. Returns nullopt iff the sampled system is
// inconsistent, which witnesses that the target is outside the span.
inline std::optional<FormPoly> express_in_generators_values(
    const std::function<GF3x(const GenValues&, const std::vector<GF3x>&)>& target_value,
    const std::vector<GenMonomial>& monos, const NamedInvariants& inv,
    const std::optional<PolyGF3>& target_poly, const ExpressOptions& opt = {}) {
    if (monos.empty()) throw std::invalid_argument("express: empty monomial set");
    SplitMix64 rng(opt.seed);
    for (int attempt = 0; attempt < opt.retries; ++attempt) {
        size_t npts = monos.size() + opt.oversample;
        std::vector<std::vector<GF3x>> rows;
        rows.reserve(npts);
        for (size_t i = 0; i < npts; ++i) {
            auto pt = rng.gf3x_point(7);
            GenValues v = evaluate_generators(inv, pt);
            std::vector<GF3x> row;
            row.reserve(monos.size() + 1);
            for (const auto& g : monos) row.push_back(gen_monomial_value(g, v));
            row.push_back(target_value(v, pt));
            rows.push_back(std::move(row));
        }
        auto sol = detail::solve_gf3x(rows, monos.size());
        if (sol.kind == detail::SolveKind::inconsistent) return std::nullopt;
        if (sol.kind == detail::SolveKind::underdetermined) continue;  // fresh points

        FormPoly f;
        bool prime_field = true;
        for (size_t i = 0; i < monos.size(); ++i) {
            const GF3x& c = sol.x[i];
            for (int j = 1; j < 8; ++j)
                if (c.c[j]) prime_field = false;
            if (!prime_field) break;
            f.add_term(monos[i], GF3(c.c[0]));
        }
        if (!prime_field) continue;  // spurious solution, resample

        // certification
        bool ok;
        if (opt.force_exact_verify ||
            (target_poly && target_poly->term_count() <= opt.exact_verify_term_cap)) {
            if (!target_poly)
                throw std::invalid_argument("express: exact verification needs the target");
            ok = (formpoly_image(f, inv) == *target_poly);
        } else {
            ok = true;
            for (size_t i = 0; ok && i < opt.extra_eval_checks; ++i) {
                auto pt = rng.gf3x_point(7);
                GenValues v = evaluate_generators(inv, pt);
                GF3x lhs;
                for (const auto& [g, c] : f.terms)
                    lhs = lhs + gen_monomial_value(g, v) * GF3x::from(c);
                ok = (lhs == target_value(v, pt));
            }
        }
        if (ok) return f;
    }
    throw std::runtime_error("express: could not certify a solution after retries");
}

inline std::optional<FormPoly> express_in_generators(const PolyGF3& T, uint64_t k,
                                                     const NamedInvariants& inv,
                                                     const std::vector<GenMonomial>& monos,
                                                     const ExpressOptions& opt = {}) {
    if (!T.is_zero() && T.degree() != k)
        throw std::invalid_argument("express: target degree differs from the stated weight");
    return express_in_generators_values(
        [&T](const GenValues&, const std::vector<GF3x>& pt) { return T.evaluate(pt); }, monos,
        inv, T, opt);
}

inline std::optional<FormPoly> express_in_generators(const PolyGF3& T, uint64_t k,
                                                     const NamedInvariants& inv,
                                                     const ExpressOptions& opt = {}) {
    return express_in_generators(T, k, inv, basis_monomials(k), opt);
}

// ---------------------------------------------------------------------------
// the relation in weight 42 and the rewrite it induces
// ---------------------------------------------------------------------------

// psi12 chi10^3 = chi14^3 + psi2^3 chi36 - psi2^2 chi10 chi14^2, as the
// right-hand side expressed over the psi12-free monomials
inline FormPoly relation42_rhs() {
    FormPoly f;
    f.add_term(GenMonomial{{0, 0, 0, 3, 0}}, GF3(1));   // chi14^3
    f.add_term(GenMonomial{{3, 0, 0, 0, 1}}, GF3(1));   // psi2^3 chi36
    f.add_term(GenMonomial{{2, 1, 0, 2, 0}}, GF3(2));   // - psi2^2 chi10 chi14^2
    return f;
}

// S*D^3 == (BD)^3 + A^3 (C D^3) - A^2 D (BD)^2 as an exact identity in a0..a6
inline bool verify_relation6(const NamedInvariants& g) {
    PolyGF3 BD = g.B * g.D;
    PolyGF3 CD3 = g.C * g.D.pow(3);
    PolyGF3 lhs = g.S * g.D.pow(3);
    PolyGF3 rhs = BD.pow(3) + g.A.pow(3) * CD3 - g.A.pow(2) * g.D * BD.pow(2);
    return lhs == rhs;
}

// substitutes chi14^3 -> psi12 chi10^3 - psi2^3 chi36 + psi2^2 chi10 chi14^2
// until every term has chi14-exponent <= 2; the invariant image is unchanged
inline FormPoly rewrite_chi14_cubes(FormPoly f) {
    for (;;) {
        auto it = std::find_if(f.terms.begin(), f.terms.end(),
                               [](const auto& t) { return t.first.e[3] >= 3; });
        if (it == f.terms.end()) return f;
        GenMonomial g = it->first;
        GF3 c = it->second;
        f.terms.erase(it);
        GenMonomial base = g;
        base.e[3] -= 3;
        auto mul = [&](std::array<uint32_t, 5> d) {
            GenMonomial m = base;
            for (size_t i = 0; i < 5; ++i) m.e[i] += d[i];
            return m;
        };
        f.add_term(mul({0, 3, 1, 0, 0}), c);            // psi12 chi10^3
        f.add_term(mul({3, 0, 0, 0, 1}), -c);           // - psi2^3 chi36
        f.add_term(mul({2, 1, 0, 2, 0}), c);            // + psi2^2 chi10 chi14^2
    }
}

// ---------------------------------------------------------------------------
// chi35^2 = P
// ---------------------------------------------------------------------------

// P = express(E^2 D^4, weight 70) on the chi14-capped basis; the system being
// solvable is exactly the structure theorem's claim, so failure aborts
inline FormPoly compute_P(const NamedInvariants& inv, const ExpressOptions& opt = {}) {
    auto target = [](const GenValues& v, const std::vector<GF3x>&) {
        return v.E.pow(2) * v.D.pow(4);
    };
    auto monos = basis_monomials(70);
    ExpressOptions o = opt;
    // certify by evaluations here; the exact image comparison against the
    // expanded E^2 D^4 is a separate, optional pass
    o.exact_verify_term_cap = 0;
    o.force_exact_verify = false;
    auto f = express_in_generators_values(target, monos, inv, std::nullopt, o);
    if (!f)
        throw std::runtime_error(
            "compute_P: E^2 D^4 is not expressible over the weight-70 basis; "
            "this would falsify the ring structure");
    return *f;
}

// ---------------------------------------------------------------------------
// dimension counting
// ---------------------------------------------------------------------------

struct CountingRow {
    int64_t k, r, c, upper;
    bool upper_ok;
    bool recurrence_applies;  // k mod 12 not in {0, 2}
    bool recurrence_ok;       // only meaningful when it applies
    bool monotone_ok;         // r(k) >= r(k-2)
};

struct CountingReport {
    std::vector<CountingRow> rows;
    size_t failures{0};
};

// checks, for all even k <= K: the restriction upper bound
// r(k) <= r(k-10) + c(k)(c(k)+1)/2, the exact recurrence off the exempt
// residues, and monotonicity of the dimensions under multiplication by psi2
inline CountingReport verify_counting(int64_t K) {
    if (K < 14 || K % 2) throw std::invalid_argument("verify_counting: need even K >= 14");
    CountingReport rep;
    for (int64_t k = 0; k <= K; k += 2) {
        CountingRow row{};
        row.k = k;
        row.r = hilbert_r(k);
        row.c = dim_level1(k);
        int64_t r10 = k >= 10 ? hilbert_r(k - 10) : 0;
        row.upper = r10 + row.c * (row.c + 1) / 2;
        row.upper_ok = row.r <= row.upper;
        row.recurrence_applies = (k % 12 != 0) && (k % 12 != 2);
        row.recurrence_ok = !row.recurrence_applies || (row.r - r10 == row.c * (row.c + 1) / 2);
        row.monotone_ok = k < 2 || row.r >= hilbert_r(k - 2);
        if (!row.upper_ok || !row.recurrence_ok || !row.monotone_ok) ++rep.failures;
        rep.rows.push_back(row);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// algebraic independence evidence
// ---------------------------------------------------------------------------

struct RankRow {
    uint64_t w;
    size_t count, rank;
};

// monomials in A, D, S, BD (weights 2, 10, 12, 14) of weight w <= W are
// linearly independent over GF(3)
inline std::vector<RankRow> independence_rank(uint64_t W, const NamedInvariants& g,
                                              uint64_t cap = 24) {
    if (W > cap) throw std::invalid_argument("independence_rank: W exceeds the configured cap");
    std::vector<RankRow> rows;
    PolyGF3 BD = g.B * g.D;
    for (uint64_t w = 2; w <= W; w += 2) {
        std::vector<PolyGF3> polys;
        for (uint32_t e4 = 0; 14ull * e4 <= w; ++e4)
            for (uint32_t e3 = 0; 14ull * e4 + 12ull * e3 <= w; ++e3)
                for (uint32_t e2 = 0; 14ull * e4 + 12ull * e3 + 10ull * e2 <= w; ++e2) {
                    uint64_t rem = w - 14ull * e4 - 12ull * e3 - 10ull * e2;
                    if (rem % 2) continue;
                    polys.push_back(g.A.pow(rem / 2) * g.D.pow(e2) * g.S.pow(e3) * BD.pow(e4));
                }
        rows.push_back({w, polys.size(), gf3_rank(polys)});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// JSON for polynomials in the generators
// ---------------------------------------------------------------------------

inline std::string formpoly_to_json(const FormPoly& f) {
    nlohmann::ordered_json j;
    j["gens"] = std::vector<std::string>(kGenNames.begin(), kGenNames.end());
    if (f.with_chi35) j["chi35_factor"] = true;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [g, c] : f.terms) {
        nlohmann::ordered_json jt;
        jt["e"] = std::vector<uint32_t>(g.e.begin(), g.e.end());
        jt["c"] = int(c.v);
        arr.push_back(std::move(jt));
    }
    j["terms"] = std::move(arr);
    return j.dump() + "\n";
}

inline FormPoly formpoly_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("generator polynomial JSON malformed at byte " +
                                    std::to_string(e.byte) + ": " + e.what());
    }
    FormPoly f;
    try {
        auto gens = j.at("gens").get<std::vector<std::string>>();
        if (!std::equal(gens.begin(), gens.end(), kGenNames.begin(), kGenNames.end(),
                        [](const std::string& a, const char* b) { return a == b; }))
            throw std::invalid_argument("unexpected generator list");
        if (j.contains("chi35_factor")) f.with_chi35 = j["chi35_factor"].get<bool>();
        for (const auto& jt : j.at("terms")) {
            auto ev = jt.at("e").get<std::vector<uint32_t>>();
            if (ev.size() != 5) throw std::invalid_argument("expected 5 exponents");
            GenMonomial g;
            std::copy(ev.begin(), ev.end(), g.e.begin());
            int c = jt.at("c").get<int>();
            if (c < 1 || c > 2) throw std::invalid_argument("coefficient not in canonical form");
            f.add_term(g, GF3(static_cast<uint8_t>(c)));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("generator polynomial JSON invalid: ") + e.what());
    }
    return f;
}

}  // namespace siegel3

#endif
