// Binary forms in x1, x2 with polynomial coefficients, and the classical
// transvectant (Omega process) over characteristic-0 coefficients.
#ifndef SIEGEL3_BINARY_FORM_HPP
#define SIEGEL3_BINARY_FORM_HPP

#include <stdexcept>

#include "siegel3/poly.hpp"

namespace siegel3 {

// A binary form is kept as a polynomial over VarSet::form() (a0..a6, x1, x2),
// homogeneous in x1, x2 of a fixed order n.
template <class C>
class BinaryForm {
public:
    BinaryForm(SparsePoly<C> p, uint32_t order) : poly_(std::move(p)), order_(order) {
        const size_t ix1 = x1_index(), ix2 = x2_index();
        for (const auto& t : poly_.terms())
            if (t.m.e[ix1] + t.m.e[ix2] != order_)
                throw std::invalid_argument("BinaryForm: not homogeneous of the stated order");
    }

    // the universal binary sextic f = sum a_i x1^{6-i} x2^i
    static BinaryForm universal_sextic() {
        const VarSet* v = VarSet::form();
        std::vector<std::pair<std::vector<uint32_t>, C>> ts;
        for (uint32_t i = 0; i <= 6; ++i) {
            std::vector<uint32_t> e(9, 0);
            e[i] = 1;
            e[7] = 6 - i;
            e[8] = i;
            ts.push_back({e, domain_traits<C>::one()});
        }
        return BinaryForm(SparsePoly<C>::from_terms(v, ts), 6);
    }

    const SparsePoly<C>& poly() const { return poly_; }
    uint32_t order() const { return order_; }
    bool is_zero() const { return poly_.is_zero(); }

    size_t x1_index() const {
        int i = poly_.vars()->index_of("x1");
        if (i < 0) throw std::logic_error("BinaryForm: variable set lacks x1");
        return static_cast<size_t>(i);
    }
    size_t x2_index() const {
        int i = poly_.vars()->index_of("x2");
        if (i < 0) throw std::logic_error("BinaryForm: variable set lacks x2");
        return static_cast<size_t>(i);
    }

    // coefficient of x1^{order-i} x2^i as a polynomial in the remaining variables
    SparsePoly<C> coefficient(uint32_t i) const {
        SparsePoly<C> r(poly_.vars());
        std::vector<std::pair<std::vector<uint32_t>, C>> ts;
        const size_t ix1 = x1_index(), ix2 = x2_index();
        for (const auto& t : poly_.terms()) {
            if (t.m.e[ix1] == order_ - i && t.m.e[ix2] == i) {
                std::vector<uint32_t> e(t.m.e.begin(), t.m.e.begin() + t.m.nvars);
                e[ix1] = 0;
                e[ix2] = 0;
                ts.push_back({e, t.c});
            }
        }
        return SparsePoly<C>::from_terms(poly_.vars(), ts);
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.order_ == b.order_ && a.poly_ == b.poly_;
    }

private:
    SparsePoly<C> poly_;
    uint32_t order_;
};

namespace detail {

template <class C>
SparsePoly<C> partial(const SparsePoly<C>& p, size_t var) {
    std::vector<std::pair<std::vector<uint32_t>, C>> ts;
    for (const auto& t : p.terms()) {
        uint32_t e = t.m.e[var];
        if (!e) continue;
        std::vector<uint32_t> ev(t.m.e.begin(), t.m.e.begin() + t.m.nvars);
        ev[var] = e - 1;
        ts.push_back({ev, t.c * C(e)});
    }
    return SparsePoly<C>::from_terms(p.vars(), ts);
}

template <class C>
SparsePoly<C> partial_pow(SparsePoly<C> p, size_t var, uint32_t k) {
    for (uint32_t i = 0; i < k; ++i) p = partial(p, var);
    return p;
}

inline QQ qq_factorial(uint32_t n) {
    QQ r(1);
    for (uint32_t i = 2; i <= n; ++i) r *= i;
    return r;
}
inline QQ qq_binom(uint32_t n, uint32_t k) {
    QQ r(1);
    for (uint32_t i = 0; i < k; ++i) r = r * QQ(n - i) / QQ(i + 1);
    return r;
}

}  // namespace detail

// k-th transvectant with the classical normalization
//   ((m-k)! (n-k)! / (m! n!)) * sum_j (-1)^j C(k,j)
//        (d^k f / dx1^{k-j} dx2^j) (d^k g / dx1^j dx2^{k-j});
// characteristic 0 only (the binomial divisions are invalid in char 3).
inline BinaryForm<QQ> transvectant(const BinaryForm<QQ>& f, const BinaryForm<QQ>& g, uint32_t k) {
    if (k > f.order() || k > g.order())
        throw std::invalid_argument("transvectant: index exceeds an operand order");
    const size_t ix1 = f.x1_index(), ix2 = f.x2_index();
    SparsePoly<QQ> acc = SparsePoly<QQ>::zero(f.poly().vars());
    for (uint32_t j = 0; j <= k; ++j) {
        SparsePoly<QQ> df = detail::partial_pow(detail::partial_pow(f.poly(), ix1, k - j), ix2, j);
        SparsePoly<QQ> dg = detail::partial_pow(detail::partial_pow(g.poly(), ix1, j), ix2, k - j);
        QQ s = detail::qq_binom(k, j);
        if (j % 2) s = -s;
        acc += (df * dg).scaled(s);
    }
    QQ pref = detail::qq_factorial(f.order() - k) * detail::qq_factorial(g.order() - k) /
              (detail::qq_factorial(f.order()) * detail::qq_factorial(g.order()));
    return BinaryForm<QQ>(acc.scaled(pref), f.order() + g.order() - 2 * k);
}

// clears denominators and the integer content; sign fixed so the grevlex-leading
// coefficient is positive
inline PolyZZ primitive_part(const SparsePoly<QQ>& p) {
    if (p.is_zero()) return PolyZZ::zero(p.vars());
    ZZ den(1);
    for (const auto& t : p.terms()) {
        ZZ d = boost::multiprecision::denominator(t.c);
        den = boost::multiprecision::lcm(den, d);
    }
    ZZ content(0);
    std::vector<std::pair<std::vector<uint32_t>, ZZ>> ts;
    for (const auto& t : p.terms()) {
        QQ scaled = t.c * QQ(den);
        ZZ num = boost::multiprecision::numerator(scaled);
        if (boost::multiprecision::denominator(scaled) != 1)
            throw std::logic_error("primitive_part: denominator clearing failed");
        content = boost::multiprecision::gcd(content, num);
        std::vector<uint32_t> e(t.m.e.begin(), t.m.e.begin() + t.m.nvars);
        ts.push_back({std::move(e), std::move(num)});
    }
    for (auto& [e, c] : ts) c /= content;
    PolyZZ r = PolyZZ::from_terms(p.vars(), ts);
    if (r.leading_term().c < 0) r = -r;
    return r;
}

}  // namespace siegel3

#endif
