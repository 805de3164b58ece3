// The SL(2) action on binary sextics: unipotent substitutions on coefficients,
// invariance testing, isobaric weights, and a linear-algebra oracle computing
// bases of invariant spaces over GF(3) as nullspaces of the action constraints.
#ifndef SIEGEL3_ACTION_HPP
#define SIEGEL3_ACTION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>

#include "siegel3/binary_form.hpp"
#include "siegel3/poly.hpp"

namespace siegel3 {

// re-expresses a polynomial over a variable set containing (by name) every
// variable the polynomial actually uses
template <class C>
SparsePoly<C> reindex(const SparsePoly<C>& p, const VarSet* target) {
    std::vector<int> where(p.vars()->size());
    for (size_t i = 0; i < p.vars()->size(); ++i) {
        where[i] = target->index_of(p.vars()->name(i));
        if (where[i] < 0) {
            for (const auto& t : p.terms())
                if (t.m.e[i])
                    throw std::invalid_argument("reindex: target lacks variable " +
                                                p.vars()->name(i));
        }
    }
    std::vector<std::pair<std::vector<uint32_t>, C>> ts;
    ts.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        std::vector<uint32_t> e(target->size(), 0);
        for (size_t i = 0; i < p.vars()->size(); ++i)
            if (where[i] >= 0) e[where[i]] = t.m.e[i];
        ts.push_back({std::move(e), t.c});
    }
    return SparsePoly<C>::from_terms(target, ts);
}

// 2x2 substitution matrix [[a, b], [c, d]] acting by x1 -> a x1 + b x2,
// x2 -> c x1 + d x2; entries are polynomials in a0..a6 and formal parameters.
template <class C>
struct Matrix2 {
    SparsePoly<C> a, b, c, d;

    Matrix2 mul(const Matrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

// The induced map on the sextic coefficients a0..a6, computed by substituting
// the matrix action into the universal sextic and re-collecting coefficients
// of x1^{6-i} x2^i. `out` must contain a0..a6 and every parameter used.
template <class C>
std::array<SparsePoly<C>, 7> coefficient_substitution(const Matrix2<C>& M, const VarSet* out) {
    std::vector<std::string> fnames = out->names();
    fnames.push_back("x1");
    fnames.push_back("x2");
    const VarSet* fv = VarSet::intern(fnames);
    const size_t ix1 = fv->size() - 2, ix2 = fv->size() - 1;

    BinaryForm<C> f = [&] {
        std::vector<std::pair<std::vector<uint32_t>, C>> ts;
        for (uint32_t i = 0; i <= 6; ++i) {
            std::vector<uint32_t> e(fv->size(), 0);
            e[static_cast<size_t>(fv->index_of("a" + std::to_string(i)))] = 1;
            e[ix1] = 6 - i;
            e[ix2] = i;
            ts.push_back({e, domain_traits<C>::one()});
        }
        return BinaryForm<C>(SparsePoly<C>::from_terms(fv, ts), 6);
    }();

    SparsePoly<C> nx1 = reindex(M.a, fv) * SparsePoly<C>::variable(fv, ix1) +
                        reindex(M.b, fv) * SparsePoly<C>::variable(fv, ix2);
    SparsePoly<C> nx2 = reindex(M.c, fv) * SparsePoly<C>::variable(fv, ix1) +
                        reindex(M.d, fv) * SparsePoly<C>::variable(fv, ix2);
    std::map<size_t, SparsePoly<C>> bind;
    bind.emplace(ix1, nx1);
    bind.emplace(ix2, nx2);
    BinaryForm<C> g(f.poly().substitute(bind), 6);

    std::array<SparsePoly<C>, 7> images;
    for (uint32_t k = 0; k <= 6; ++k) images[k] = reindex(g.coefficient(k), out);
    return images;
}

enum class Unipotent { upper, lower };  // upper: x2 -> t x1 + x2; lower: x1 -> x1 + t x2

inline const std::array<PolyGF3, 7>& unipotent_images(Unipotent which) {
    static const std::array<PolyGF3, 7> up = [] {
        const VarSet* vt = VarSet::invariant_t();
        PolyGF3 one = PolyGF3::constant(vt, GF3(1));
        PolyGF3 t = PolyGF3::variable(vt, 7);
        return coefficient_substitution<GF3>({one, PolyGF3::zero(vt), t, one}, vt);
    }();
    static const std::array<PolyGF3, 7> low = [] {
        const VarSet* vt = VarSet::invariant_t();
        PolyGF3 one = PolyGF3::constant(vt, GF3(1));
        PolyGF3 t = PolyGF3::variable(vt, 7);
        return coefficient_substitution<GF3>({one, t, PolyGF3::zero(vt), one}, vt);
    }();
    return which == Unipotent::upper ? up : low;
}

// P(a0..a6) evaluated on the coefficient images; result in a0..a6 and t
inline PolyGF3 unipotent_action(Unipotent which, const PolyGF3& P) {
    if (!(*P.vars() == *VarSet::invariant()))
        throw std::invalid_argument("unipotent_action: expected a polynomial in a0..a6");
    const auto& img = unipotent_images(which);
    std::map<size_t, PolyGF3> bind;
    for (size_t k = 0; k < 7; ++k) bind.emplace(k, img[k]);
    return P.substitute(bind);
}

// common value of sum_i i*e_i over all monomials, if it exists
inline std::optional<uint64_t> isobaric_weight(const PolyGF3& P) {
    if (P.is_zero()) throw std::invalid_argument("isobaric_weight: zero polynomial");
    if (!(*P.vars() == *VarSet::invariant()))
        throw std::invalid_argument("isobaric_weight: expected a polynomial in a0..a6");
    std::optional<uint64_t> w;
    for (const auto& t : P.terms()) {
        uint64_t tw = 0;
        for (size_t i = 0; i < 7; ++i) tw += static_cast<uint64_t>(i) * t.m.e[i];
        if (!w)
            w = tw;
        else if (*w != tw)
            return std::nullopt;
    }
    return w;
}

// invariance under SL(2) in characteristic 3: polynomial identity in t under
// both unipotent one-parameter substitutions, plus the isobaric weight 3*deg
inline bool is_invariant(const PolyGF3& P) {
    if (P.is_zero() || !P.is_homogeneous()) return false;
    auto w = isobaric_weight(P);
    if (!w || *w != 3 * P.degree()) return false;
    PolyGF3 lifted = reindex(P, VarSet::invariant_t());
    return unipotent_action(Unipotent::upper, P) == lifted &&
           unipotent_action(Unipotent::lower, P) == lifted;
}

// a_i <-> a_{6-i}, induced by interchanging x1 and x2
inline PolyGF3 mirror_swap(const PolyGF3& P) {
    return P.permuted({6, 5, 4, 3, 2, 1, 0});
}

// monomials in a0..a6 of total degree d and weight sum(i*e_i) = w,
// in lexicographic backtracking order on (e0, ..., e6)
inline std::vector<Monomial> isobaric_monomials(uint32_t d, uint64_t w) {
    std::vector<Monomial> out;
    std::array<uint32_t, 7> e{};
    auto rec = [&](auto&& self, size_t i, uint32_t rd, int64_t rw) -> void {
        if (i == 6) {
            if (rw == static_cast<int64_t>(6) * rd) {
                e[6] = rd;
                Monomial m(7);
                for (size_t k = 0; k < 7; ++k) m.e[k] = e[k];
                m.deg = d;
                out.push_back(m);
                e[6] = 0;
            }
            return;
        }
        for (uint32_t v = 0; v <= rd; ++v) {
            int64_t nrw = rw - static_cast<int64_t>(i) * v;
            uint32_t rem = rd - v;
            if (nrw < 0 || nrw < static_cast<int64_t>(i + 1) * rem ||
                nrw > static_cast<int64_t>(6) * rem)
                continue;
            e[i] = v;
            self(self, i + 1, rem, nrw);
            e[i] = 0;
        }
    };
    rec(rec, 0, d, static_cast<int64_t>(w));
    return out;
}

// rank over GF(3) of a family of polynomials viewed as coefficient vectors,
// by sparse elimination on leading monomials
inline size_t gf3_rank(const std::vector<PolyGF3>& polys) {
    std::vector<PolyGF3> ech;  // pairwise distinct leading monomials
    for (PolyGF3 v : polys) {
        bool reduced = true;
        while (!v.is_zero() && reduced) {
            reduced = false;
            for (const auto& e : ech) {
                GF3 c = v.coeff(e.leading_term().m);
                if (!c.is_zero()) {
                    v -= e.scaled(c * e.leading_term().c.inverse());
                    reduced = true;
                    if (v.is_zero()) break;
                }
            }
        }
        if (!v.is_zero()) ech.push_back(std::move(v));
    }
    return ech.size();
}

namespace detail {

// image of a single monomial under the cached per-variable image powers
class ActionExpander {
public:
    explicit ActionExpander(Unipotent which) : images_(unipotent_images(which)) {}

    PolyGF3 expand(const Monomial& m) {
        PolyGF3 prod = PolyGF3::constant(VarSet::invariant_t(), GF3(1));
        for (size_t k = 0; k < 7; ++k) {
            if (!m.e[k]) continue;
            prod *= power(k, m.e[k]);
        }
        return prod;
    }

private:
    const std::array<PolyGF3, 7>& images_;
    std::map<std::pair<size_t, uint32_t>, PolyGF3> cache_;

    const PolyGF3& power(size_t k, uint32_t e) {
        auto key = std::make_pair(k, e);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, images_[k].pow(e)).first;
        return it->second;
    }
};

struct RowKey {
    int side;
    Monomial m;
    bool operator<(const RowKey& o) const {
        if (side != o.side) return side < o.side;
        return grevlex_cmp(m, o.m) < 0;
    }
};

}  // namespace detail

// Basis of the space of SL(2)-invariants of degree d over GF(3): the nullspace
// of the sparse linear system "unipotent_action(upper,.) - id = 0 and
// unipotent_action(lower,.) - id = 0 identically in t" on the isobaric monomial
// space, reduced to a deterministic echelon basis.
inline std::vector<PolyGF3> invariant_space_basis(uint32_t d, size_t monomial_cap = 1000000) {
    const std::vector<Monomial> cols = isobaric_monomials(d, 3ull * d);
    if (cols.size() > monomial_cap)
        throw std::invalid_argument("invariant_space_basis: monomial count " +
                                    std::to_string(cols.size()) + " exceeds cap");
    const size_t N = cols.size();
    if (N == 0) return {};

    // assemble constraint rows, keyed by (action side, image monomial with t-power)
    struct Entry {
        uint32_t col;
        uint8_t coeff;
    };
    std::map<detail::RowKey, std::vector<Entry>> rows;
    for (int side = 0; side < 2; ++side) {
        detail::ActionExpander ex(side == 0 ? Unipotent::upper : Unipotent::lower);
        for (size_t ci = 0; ci < N; ++ci) {
            PolyGF3 img = ex.expand(cols[ci]);
            for (const auto& t : img.terms()) {
                // drop the identity component (t-degree 0 and the original monomial)
                if (t.m.e[7] == 0) continue;
                rows[{side, t.m}].push_back({static_cast<uint32_t>(ci), t.c.v});
            }
        }
    }

    // incremental nullspace: K's columns span the candidate space
    std::vector<std::vector<uint8_t>> K(N);
    for (size_t i = 0; i < N; ++i) {
        K[i].assign(N, 0);
        K[i][i] = 1;
    }
    for (const auto& [key, row] : rows) {
        if (K.empty()) break;
        const size_t dim = K.size();
        std::vector<uint8_t> v(dim, 0);
        bool nonzero = false;
        for (size_t j = 0; j < dim; ++j) {
            unsigned acc = 0;
            const auto& col = K[j];
            for (const auto& en : row) acc += en.coeff * col[en.col];
            v[j] = static_cast<uint8_t>(acc % 3);
            nonzero |= (v[j] != 0);
        }
        if (!nonzero) continue;
        size_t piv = 0;
        while (v[piv] == 0) ++piv;
        if (v[piv] == 2) {
            for (auto& x : K[piv]) x = static_cast<uint8_t>((x * 2) % 3);
            v[piv] = 1;
        }
        const std::vector<uint8_t>& pc = K[piv];
        for (size_t j = 0; j < dim; ++j) {
            if (j == piv || v[j] == 0) continue;
            uint8_t f = static_cast<uint8_t>(3 - v[j]);  // K[j] += f * pc
            uint8_t* kj = K[j].data();
            const uint8_t* ps = pc.data();
            for (size_t n = 0; n < N; ++n) {
                uint8_t r = static_cast<uint8_t>(kj[n] + f * ps[n]);
                if (r >= 3) r -= 3;
                if (r >= 3) r -= 3;
                kj[n] = r;
            }
        }
        K.erase(K.begin() + static_cast<long>(piv));
    }

    // reduced echelon form w.r.t. the monomial enumeration order, for determinism
    std::vector<std::vector<uint8_t>> basis = std::move(K);
    size_t lead = 0;
    for (size_t r = 0; r < basis.size(); ++r) {
        size_t pivrow = SIZE_MAX, pivcol = r;
        for (size_t n = lead; n < N && pivrow == SIZE_MAX; ++n)
            for (size_t j = r; j < basis.size(); ++j)
                if (basis[j][n]) {
                    pivrow = n;
                    pivcol = j;
                    break;
                }
        if (pivrow == SIZE_MAX) break;
        std::swap(basis[r], basis[pivcol]);
        if (basis[r][pivrow] == 2)
            for (auto& x : basis[r]) x = static_cast<uint8_t>((x * 2) % 3);
        for (size_t j = 0; j < basis.size(); ++j) {
            if (j == r || !basis[j][pivrow]) continue;
            uint8_t f = static_cast<uint8_t>(3 - basis[j][pivrow]);
            for (size_t n = 0; n < N; ++n) {
                uint8_t x = static_cast<uint8_t>(basis[j][n] + f * basis[r][n]);
                if (x >= 3) x -= 3;
                if (x >= 3) x -= 3;
                basis[j][n] = x;
            }
        }
        lead = pivrow + 1;
    }

    std::vector<PolyGF3> out;
    for (const auto& vec : basis) {
        std::vector<std::pair<std::vector<uint32_t>, GF3>> ts;
        for (size_t n = 0; n < N; ++n)
            if (vec[n])
                ts.push_back({std::vector<uint32_t>(cols[n].e.begin(), cols[n].e.begin() + 7),
                              GF3(vec[n])});
        out.push_back(PolyGF3::from_terms(VarSet::invariant(), ts));
    }
    return out;
}

}  // namespace siegel3

#endif
