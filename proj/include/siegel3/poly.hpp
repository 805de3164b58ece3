// Exact sparse multivariate polynomials over a selectable coefficient domain.
// Canonical form: terms sorted in descending grevlex order, no zero coefficients.
#ifndef SIEGEL3_POLY_HPP
#define SIEGEL3_POLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "siegel3/integers.hpp"
#include "siegel3/monomial.hpp"

namespace siegel3 {

// scalar lifts used by evaluate()
inline GF3 lift_to(const GF3& c, GF3) { return c; }
template <int M>
inline GF3Ext<M> lift_to(const GF3& c, GF3Ext<M>) { return GF3Ext<M>::from(c); }
template <int M>
inline GF3Ext<M> lift_to(const GF3Ext<M>& c, GF3Ext<M>) { return c; }
inline ZZ lift_to(const ZZ& c, ZZ) { return c; }
inline QQ lift_to(const QQ& c, QQ) { return c; }

template <class C>
class SparsePoly {
public:
    struct Term {
        Monomial m;
        C c;
    };

    SparsePoly() : vars_(VarSet::invariant()) {}
    explicit SparsePoly(const VarSet* vars) : vars_(vars) {}

    static SparsePoly zero(const VarSet* vars) { return SparsePoly(vars); }
    static SparsePoly constant(const VarSet* vars, C c) {
        SparsePoly p(vars);
        if (!is_zero_scalar(c))
            p.terms_.push_back({Monomial::unit(static_cast<uint8_t>(vars->size())), c});
        return p;
    }
    static SparsePoly variable(const VarSet* vars, size_t i, uint32_t exp = 1) {
        if (i >= vars->size()) throw std::out_of_range("SparsePoly: variable index");
        SparsePoly p(vars);
        if (exp > kMaxExponent) throw std::overflow_error("SparsePoly: exponent overflow");
        p.terms_.push_back({Monomial::var(static_cast<uint8_t>(vars->size()), i, exp),
                            domain_traits<C>::one()});
        return p;
    }
    // builds canonical form from arbitrary (exponent vector, coefficient) pairs
    static SparsePoly from_terms(const VarSet* vars,
                                 const std::vector<std::pair<std::vector<uint32_t>, C>>& ts) {
        SparsePoly p(vars);
        for (const auto& [ev, c] : ts) {
            if (ev.size() != vars->size())
                throw std::invalid_argument("SparsePoly: exponent vector length mismatch");
            Monomial m(static_cast<uint8_t>(vars->size()));
            for (size_t i = 0; i < ev.size(); ++i) {
                if (ev[i] > kMaxExponent) throw std::overflow_error("SparsePoly: exponent overflow");
                m.e[i] = ev[i];
            }
            m.recompute_degree();
            p.terms_.push_back({m, c});
        }
        p.canonicalize();
        return p;
    }

    const VarSet* vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // total degree; grevlex is degree-compatible so the leading term carries it
    uint64_t degree() const {
        if (terms_.empty()) throw std::domain_error("SparsePoly: degree of zero polynomial");
        return terms_.front().m.deg;
    }
    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.m.deg != terms_.front().m.deg) return false;
        return true;
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::domain_error("SparsePoly: leading term of zero polynomial");
        return terms_.front();
    }

    C coeff(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& mm) {
                                       return grevlex_cmp(t.m, mm) > 0;
                                   });
        if (it != terms_.end() && it->m == m) return it->c;
        return domain_traits<C>::zero();
    }
    C coeff(const std::vector<uint32_t>& ev) const {
        Monomial m(static_cast<uint8_t>(vars_->size()));
        for (size_t i = 0; i < ev.size(); ++i) m.e[i] = ev[i];
        m.recompute_degree();
        return coeff(m);
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        a.check_same_context(b);
        SparsePoly r(a.vars_);
        r.terms_ = merge_terms(a.terms_, b.terms_, false);
        return r;
    }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
        a.check_same_context(b);
        SparsePoly r(a.vars_);
        r.terms_ = merge_terms(a.terms_, b.terms_, true);
        return r;
    }
    SparsePoly operator-() const {
        SparsePoly r(vars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.m, negate_scalar(t.c)});
        return r;
    }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        a.check_same_context(b);
        SparsePoly r(a.vars_);
        if (a.is_zero() || b.is_zero()) return r;
        std::unordered_map<Monomial, C, MonomialHash> acc;
        acc.reserve(a.terms_.size() + b.terms_.size());
        const bool a_small = a.terms_.size() <= b.terms_.size();
        const auto& outer = a_small ? a.terms_ : b.terms_;
        const auto& inner = a_small ? b.terms_ : a.terms_;
        for (const auto& ta : outer)
            for (const auto& tb : inner) {
                Monomial m = mono_mul(ta.m, tb.m);
                auto [it, fresh] = acc.try_emplace(m, domain_traits<C>::zero());
                it->second += ta.c * tb.c;
            }
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!is_zero_scalar(c)) r.terms_.push_back({m, std::move(c)});
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return grevlex_cmp(x.m, y.m) > 0; });
        return r;
    }
    SparsePoly& operator+=(const SparsePoly& b) { return *this = *this + b; }
    SparsePoly& operator-=(const SparsePoly& b) { return *this = *this - b; }
    SparsePoly& operator*=(const SparsePoly& b) { return *this = *this * b; }

    SparsePoly scaled(const C& s) const {
        SparsePoly r(vars_);
        if (is_zero_scalar(s)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            C c = t.c * s;
            if (!is_zero_scalar(c)) r.terms_.push_back({t.m, std::move(c)});
        }
        return r;
    }

    SparsePoly pow(uint64_t e) const {
        if (e == 0) return constant(vars_, domain_traits<C>::one());
        if (is_zero()) return zero(vars_);
        if constexpr (std::is_same_v<C, GF3>) {
            // base-3 splitting: p^(3^k) is the k-fold Frobenius (free over GF(3))
            SparsePoly result = constant(vars_, domain_traits<C>::one());
            SparsePoly base = *this;
            while (e) {
                for (uint64_t i = 0; i < e % 3; ++i) result *= base;
                e /= 3;
                if (e) base = base.frobenius();
            }
            return result;
        } else {
            SparsePoly result = constant(vars_, domain_traits<C>::one());
            SparsePoly base = *this;
            while (e) {
                if (e & 1) result *= base;
                e >>= 1;
                if (e) base = base * base;
            }
            return result;
        }
    }

    // x -> x^3 on monomials, c -> c^3 on coefficients (identity for GF(3))
    SparsePoly frobenius() const {
        SparsePoly r(vars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m(t.m.nvars);
            for (size_t i = 0; i < t.m.nvars; ++i) {
                uint64_t v = 3ull * t.m.e[i];
                if (v > kMaxExponent) throw std::overflow_error("frobenius: exponent overflow");
                m.e[i] = static_cast<uint32_t>(v);
            }
            m.deg = 3 * t.m.deg;
            if constexpr (std::is_same_v<C, GF3>) {
                r.terms_.push_back({m, t.c});
            } else {
                r.terms_.push_back({m, t.c * t.c * t.c});
            }
        }
        // monomial order is preserved under exponent scaling
        return r;
    }

    // substitution: variable index -> replacement polynomial (same domain);
    // unbound variables are carried through unchanged
    SparsePoly substitute(const std::map<size_t, SparsePoly>& bindings) const {
        for (const auto& [i, img] : bindings) {
            if (i >= vars_->size()) throw std::out_of_range("substitute: variable index");
            if (!img.is_zero() && img.vars() != bindings.begin()->second.vars())
                throw std::invalid_argument("substitute: binding images disagree on variables");
        }
        const VarSet* out_vars = bindings.empty() ? vars_ : bindings.begin()->second.vars();
        // unbound variables must exist in the output variable set
        std::vector<int> carry(vars_->size(), -1);
        for (size_t i = 0; i < vars_->size(); ++i) {
            if (bindings.count(i)) continue;
            int j = out_vars->index_of(vars_->name(i));
            if (j < 0)
                throw std::invalid_argument("substitute: unbound variable " + vars_->name(i) +
                                            " absent from image variable set");
            carry[i] = j;
        }
        std::map<std::pair<size_t, uint32_t>, SparsePoly> pow_cache;
        SparsePoly acc = zero(out_vars);
        for (const auto& t : terms_) {
            SparsePoly prod = constant(out_vars, t.c);
            for (size_t i = 0; i < vars_->size(); ++i) {
                uint32_t e = t.m.e[i];
                if (!e) continue;
                auto bit = bindings.find(i);
                if (bit == bindings.end()) {
                    prod *= variable(out_vars, static_cast<size_t>(carry[i]), e);
                } else {
                    auto key = std::make_pair(i, e);
                    auto pit = pow_cache.find(key);
                    if (pit == pow_cache.end())
                        pit = pow_cache.emplace(key, bit->second.pow(e)).first;
                    prod *= pit->second;
                }
            }
            acc += prod;
        }
        return acc;
    }

    // full evaluation at a point (all variables bound), exact in the target field
    template <class F>
    F evaluate(const std::vector<F>& point) const {
        if (point.size() != vars_->size())
            throw std::invalid_argument("evaluate: point arity mismatch (unbound variable)");
        std::vector<std::vector<F>> pows(vars_->size());
        for (size_t i = 0; i < vars_->size(); ++i) {
            uint32_t maxe = 0;
            for (const auto& t : terms_) maxe = std::max(maxe, t.m.e[i]);
            pows[i].reserve(maxe + 1);
            pows[i].push_back(lift_to(domain_traits<C>::one(), F{}));
            for (uint32_t k = 1; k <= maxe; ++k) pows[i].push_back(pows[i].back() * point[i]);
        }
        F acc = lift_to(domain_traits<C>::zero(), F{});
        for (const auto& t : terms_) {
            F v = lift_to(t.c, F{});
            for (size_t i = 0; i < vars_->size(); ++i)
                if (t.m.e[i]) v = v * pows[i][t.m.e[i]];
            acc = acc + v;
        }
        return acc;
    }

    // sub-polynomial of terms with e[var] == exp, that exponent zeroed out
    SparsePoly slice(size_t var, uint32_t exp) const {
        SparsePoly r(vars_);
        for (const auto& t : terms_)
            if (t.m.e[var] == exp) {
                Monomial m = t.m;
                m.e[var] = 0;
                m.deg -= exp;
                r.terms_.push_back({m, t.c});
            }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return grevlex_cmp(x.m, y.m) > 0; });
        return r;
    }
    uint32_t max_exponent(size_t var) const {
        uint32_t m = 0;
        for (const auto& t : terms_) m = std::max(m, t.m.e[var]);
        return m;
    }

    // reindex variables: position i moves to position perm[i] (same size)
    SparsePoly permuted(const std::vector<size_t>& perm) const {
        if (perm.size() != vars_->size()) throw std::invalid_argument("permuted: size mismatch");
        SparsePoly r(vars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m(t.m.nvars);
            for (size_t i = 0; i < perm.size(); ++i) m.e[perm[i]] = t.m.e[i];
            m.deg = t.m.deg;
            r.terms_.push_back({m, t.c});
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return grevlex_cmp(x.m, y.m) > 0; });
        return r;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (!(*a.vars_ == *b.vars_) || a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].m != b.terms_[i].m || !(a.terms_[i].c == b.terms_[i].c)) return false;
        return true;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            if (!first) os << " + ";
            first = false;
            os << domain_traits<C>::to_string(t.c);
            for (size_t i = 0; i < vars_->size(); ++i) {
                if (!t.m.e[i]) continue;
                os << "*" << vars_->name(i);
                if (t.m.e[i] > 1) os << "^" << t.m.e[i];
            }
        }
        return os.str();
    }

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return grevlex_cmp(x.m, y.m) > 0; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().m == t.m)
                out.back().c += t.c;
            else
                out.push_back(std::move(t));
            if (!out.empty() && is_zero_scalar(out.back().c)) out.pop_back();
        }
        terms_ = std::move(out);
    }

private:
    const VarSet* vars_;
    std::vector<Term> terms_;

    void check_same_context(const SparsePoly& o) const {
        if (!(*vars_ == *o.vars_))
            throw std::invalid_argument("SparsePoly: operands have different variable sets");
    }

    static bool is_zero_scalar(const C& c) {
        if constexpr (std::is_same_v<C, ZZ> || std::is_same_v<C, QQ>)
            return c == 0;
        else
            return c.is_zero();
    }
    static C negate_scalar(const C& c) { return -c; }

    static std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                                         bool subtract) {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            int cmp;
            if (i >= a.size())
                cmp = -1;
            else if (j >= b.size())
                cmp = 1;
            else
                cmp = grevlex_cmp(a[i].m, b[j].m);
            if (cmp > 0) {
                out.push_back(a[i++]);
            } else if (cmp < 0) {
                const Term& t = b[j++];
                out.push_back({t.m, subtract ? -t.c : t.c});
                if (is_zero_scalar(out.back().c)) out.pop_back();
            } else {
                C c = subtract ? C(a[i].c - b[j].c) : C(a[i].c + b[j].c);
                if (!is_zero_scalar(c)) out.push_back({a[i].m, std::move(c)});
                ++i, ++j;
            }
        }
        return out;
    }

    template <class>
    friend class SparsePoly;
};

using PolyGF3 = SparsePoly<GF3>;
using PolyGF3x = SparsePoly<GF3x>;
using PolyZZ = SparsePoly<ZZ>;
using PolyQQ = SparsePoly<QQ>;

// coefficient-wise reduction Z -> GF(3), zero terms dropped
inline PolyGF3 reduce_mod_3(const PolyZZ& f) {
    PolyGF3 r(f.vars());
    std::vector<std::pair<std::vector<uint32_t>, GF3>> ts;
    ts.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        GF3 c = reduce_scalar_mod3(t.c);
        if (c.is_zero()) continue;
        std::vector<uint32_t> ev(t.m.e.begin(), t.m.e.begin() + t.m.nvars);
        ts.push_back({std::move(ev), c});
    }
    return PolyGF3::from_terms(f.vars(), ts);
}

namespace detail {

// log-structured buckets of sorted term vectors; supports leading-term pops and
// merged subtraction without quadratic vector rewrites
template <class C>
class Geobucket {
    using Term = typename SparsePoly<C>::Term;

public:
    void add(std::vector<Term> v) {
        if (v.empty()) return;
        size_t idx = 0, cap = 16;
        while (v.size() > cap) {
            ++idx;
            cap *= 4;
        }
        while (idx < buckets_.size() && heads_[idx] < buckets_[idx].size()) {
            std::vector<Term> live(buckets_[idx].begin() + heads_[idx], buckets_[idx].end());
            buckets_[idx].clear();
            heads_[idx] = 0;
            v = merge(std::move(v), std::move(live));
            ++idx;
        }
        if (idx >= buckets_.size()) {
            buckets_.resize(idx + 1);
            heads_.resize(idx + 1, 0);
        }
        buckets_[idx] = std::move(v);
        heads_[idx] = 0;
    }

    // pops the grevlex-greatest monomial with nonzero combined coefficient
    std::optional<Term> pop_leading() {
        for (;;) {
            int best = -1;
            for (size_t b = 0; b < buckets_.size(); ++b) {
                if (heads_[b] >= buckets_[b].size()) continue;
                if (best < 0 ||
                    grevlex_cmp(buckets_[b][heads_[b]].m, buckets_[best][heads_[best]].m) > 0)
                    best = static_cast<int>(b);
            }
            if (best < 0) return std::nullopt;
            Monomial m = buckets_[best][heads_[best]].m;
            C c = domain_traits<C>::zero();
            for (size_t b = 0; b < buckets_.size(); ++b) {
                if (heads_[b] < buckets_[b].size() && buckets_[b][heads_[b]].m == m) {
                    c += buckets_[b][heads_[b]].c;
                    ++heads_[b];
                }
            }
            bool zero;
            if constexpr (std::is_same_v<C, ZZ> || std::is_same_v<C, QQ>)
                zero = (c == 0);
            else
                zero = c.is_zero();
            if (!zero) return Term{m, std::move(c)};
        }
    }

private:
    std::vector<std::vector<Term>> buckets_;
    std::vector<size_t> heads_;

    static std::vector<Term> merge(std::vector<Term> a, std::vector<Term> b) {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            int cmp;
            if (i >= a.size())
                cmp = -1;
            else if (j >= b.size())
                cmp = 1;
            else
                cmp = grevlex_cmp(a[i].m, b[j].m);
            if (cmp > 0)
                out.push_back(std::move(a[i++]));
            else if (cmp < 0)
                out.push_back(std::move(b[j++]));
            else {
                C c = a[i].c + b[j].c;
                bool zero;
                if constexpr (std::is_same_v<C, ZZ> || std::is_same_v<C, QQ>)
                    zero = (c == 0);
                else
                    zero = c.is_zero();
                if (!zero) out.push_back({a[i].m, std::move(c)});
                ++i, ++j;
            }
        }
        return out;
    }
};

}  // namespace detail

// single-divisor multivariate division under the fixed monomial order;
// returns the quotient iff the division is exact (remainder zero)
template <class C>
std::optional<SparsePoly<C>> exact_divide(const SparsePoly<C>& f, const SparsePoly<C>& g) {
    if (g.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
    if (!(*f.vars() == *g.vars()))
        throw std::invalid_argument("exact_divide: operands have different variable sets");
    if (f.is_zero()) return SparsePoly<C>::zero(f.vars());

    const auto& glt = g.leading_term();
    std::vector<typename SparsePoly<C>::Term> gtail(g.terms().begin() + 1, g.terms().end());

    detail::Geobucket<C> rem;
    rem.add(std::vector<typename SparsePoly<C>::Term>(f.terms().begin(), f.terms().end()));

    std::vector<std::pair<std::vector<uint32_t>, C>> q;
    while (auto lt = rem.pop_leading()) {
        if (!mono_divides(glt.m, lt->m)) return std::nullopt;
        C c;
        if constexpr (std::is_same_v<C, ZZ>) {
            if (lt->c % glt.c != 0) return std::nullopt;
            c = lt->c / glt.c;
        } else {
            c = lt->c * glt.c.inverse();
        }
        Monomial qm = mono_quotient(lt->m, glt.m);
        std::vector<uint32_t> ev(qm.e.begin(), qm.e.begin() + qm.nvars);
        q.push_back({std::move(ev), c});
        // subtract c * qm * g; the leading term cancels by construction
        std::vector<typename SparsePoly<C>::Term> sub;
        sub.reserve(gtail.size());
        for (const auto& t : gtail) sub.push_back({mono_mul(qm, t.m), -(c * t.c)});
        rem.add(std::move(sub));
    }
    return SparsePoly<C>::from_terms(f.vars(), q);
}

}  // namespace siegel3

#endif
