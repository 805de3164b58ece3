// Prime field GF(3) and extension fields GF(3^m) with a fixed irreducible modulus.
// All arithmetic is exact; no floating point anywhere in this library.
#ifndef SIEGEL3_GF3_HPP
#define SIEGEL3_GF3_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegel3 {

struct GF3 {
    uint8_t v{0};  // always in {0,1,2}

    constexpr GF3() = default;
    constexpr explicit GF3(uint8_t x) : v(x) {}

    static constexpr GF3 of(long long x) {
        long long r = x % 3;
        if (r < 0) r += 3;
        return GF3(static_cast<uint8_t>(r));
    }

    constexpr bool is_zero() const { return v == 0; }
    constexpr bool is_one() const { return v == 1; }

    friend constexpr GF3 operator+(GF3 a, GF3 b) { return GF3(static_cast<uint8_t>((a.v + b.v) % 3)); }
    friend constexpr GF3 operator-(GF3 a, GF3 b) { return GF3(static_cast<uint8_t>((a.v + 3 - b.v) % 3)); }
    friend constexpr GF3 operator*(GF3 a, GF3 b) { return GF3(static_cast<uint8_t>((a.v * b.v) % 3)); }
    constexpr GF3 operator-() const { return GF3(static_cast<uint8_t>((3 - v) % 3)); }
    GF3& operator+=(GF3 b) { v = static_cast<uint8_t>((v + b.v) % 3); return *this; }
    GF3& operator-=(GF3 b) { v = static_cast<uint8_t>((v + 3 - b.v) % 3); return *this; }
    GF3& operator*=(GF3 b) { v = static_cast<uint8_t>((v * b.v) % 3); return *this; }

    // inverse: 1->1, 2->2 (2*2 = 4 = 1)
    GF3 inverse() const {
        if (v == 0) throw std::domain_error("GF3: inverse of zero");
        return GF3(v);
    }
    friend constexpr bool operator==(GF3 a, GF3 b) { return a.v == b.v; }
    friend constexpr bool operator!=(GF3 a, GF3 b) { return a.v != b.v; }
};

namespace detail {

// Division of GF(3)[x] polynomials (coefficient vectors, low degree first);
// returns true iff g divides u exactly.
inline bool gf3x_divides(std::vector<uint8_t> u, const std::vector<uint8_t>& g) {
    while (u.size() >= g.size()) {
        uint8_t c = u.back();
        if (c != 0) {
            size_t sh = u.size() - g.size();
            for (size_t i = 0; i < g.size(); ++i)
                u[sh + i] = static_cast<uint8_t>((u[sh + i] + 3 * c - c * g[i]) % 3);
        }
        u.pop_back();
        while (!u.empty() && u.back() == 0) u.pop_back();
        if (u.empty()) return true;
    }
    return u.empty();
}

// Exhaustive check: no monic factor of degree 1..deg/2 divides the monic
// degree-`deg` polynomial with low-order coefficients `tail`.
inline bool gf3x_irreducible(const std::vector<uint8_t>& tail, int deg) {
    std::vector<uint8_t> g(tail);
    g.push_back(1);
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= 3;
        for (long long n = 0; n < count; ++n) {
            std::vector<uint8_t> f;
            long long x = n;
            for (int i = 0; i < d; ++i) { f.push_back(static_cast<uint8_t>(x % 3)); x /= 3; }
            f.push_back(1);
            if (gf3x_divides(g, f)) return false;
        }
    }
    return true;
}

}  // namespace detail

// GF(3^M): residues modulo a fixed irreducible monic polynomial of degree M.
// The default artifact instantiation is M = 8 with modulus x^8 + x^2 + 2
// (the least monic irreducible of degree 8 under base-3 encoding of the tail).
template <int M>
struct GF3Ext {
    static_assert(M >= 2 && M <= 16);
    std::array<uint8_t, M> c{};  // coefficients, low degree first

    static const std::array<uint8_t, M>& modulus_tail() {
        static const std::array<uint8_t, M> tail = [] {
            std::array<uint8_t, M> t{};
            if constexpr (M == 8) {
                t = {2, 0, 1, 0, 0, 0, 0, 0};  // x^8 + x^2 + 2
            } else {
                // deterministic search: least tail (base-3 encoded) giving an irreducible
                long long count = 1;
                for (int i = 0; i < M; ++i) count *= 3;
                for (long long n = 0; n < count; ++n) {
                    std::vector<uint8_t> tv;
                    long long x = n;
                    for (int i = 0; i < M; ++i) { tv.push_back(static_cast<uint8_t>(x % 3)); x /= 3; }
                    if (detail::gf3x_irreducible(tv, M)) {
                        for (int i = 0; i < M; ++i) t[i] = tv[i];
                        break;
                    }
                }
            }
            if (!detail::gf3x_irreducible(std::vector<uint8_t>(t.begin(), t.end()), M))
                throw std::logic_error("GF3Ext: modulus failed irreducibility check");
            return t;
        }();
        return tail;
    }

    static GF3Ext zero() { return GF3Ext{}; }
    static GF3Ext one() {
        GF3Ext r;
        r.c[0] = 1;
        return r;
    }
    static GF3Ext from(GF3 s) {
        GF3Ext r;
        r.c[0] = s.v;
        return r;
    }

    bool is_zero() const {
        for (auto x : c)
            if (x) return false;
        return true;
    }

    friend GF3Ext operator+(const GF3Ext& a, const GF3Ext& b) {
        GF3Ext r;
        for (int i = 0; i < M; ++i) r.c[i] = static_cast<uint8_t>((a.c[i] + b.c[i]) % 3);
        return r;
    }
    friend GF3Ext operator-(const GF3Ext& a, const GF3Ext& b) {
        GF3Ext r;
        for (int i = 0; i < M; ++i) r.c[i] = static_cast<uint8_t>((a.c[i] + 3 - b.c[i]) % 3);
        return r;
    }
    friend GF3Ext operator*(const GF3Ext& a, const GF3Ext& b) {
        std::array<uint16_t, 2 * M - 1> t{};
        for (int i = 0; i < M; ++i) {
            if (!a.c[i]) continue;
            for (int j = 0; j < M; ++j) t[i + j] = static_cast<uint16_t>(t[i + j] + a.c[i] * b.c[j]);
        }
        const auto& mod = modulus_tail();
        for (int i = 2 * M - 2; i >= M; --i) {
            uint16_t cc = static_cast<uint16_t>(t[i] % 3);
            if (cc) {
                t[i] = 0;
                for (int j = 0; j < M; ++j)
                    t[i - M + j] = static_cast<uint16_t>(t[i - M + j] + cc * (3 - mod[j]));
            } else {
                t[i] = 0;
            }
        }
        GF3Ext r;
        for (int i = 0; i < M; ++i) r.c[i] = static_cast<uint8_t>(t[i] % 3);
        return r;
    }
    friend GF3Ext operator*(const GF3Ext& a, GF3 s) {
        GF3Ext r;
        for (int i = 0; i < M; ++i) r.c[i] = static_cast<uint8_t>((a.c[i] * s.v) % 3);
        return r;
    }
    GF3Ext operator-() const {
        GF3Ext r;
        for (int i = 0; i < M; ++i) r.c[i] = static_cast<uint8_t>((3 - c[i]) % 3);
        return r;
    }
    GF3Ext& operator+=(const GF3Ext& b) { return *this = *this + b; }
    GF3Ext& operator-=(const GF3Ext& b) { return *this = *this - b; }
    GF3Ext& operator*=(const GF3Ext& b) { return *this = *this * b; }

    GF3Ext pow(unsigned long long e) const {
        GF3Ext r = one(), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    GF3Ext inverse() const {
        if (is_zero()) throw std::domain_error("GF3Ext: inverse of zero");
        unsigned long long q = 1;
        for (int i = 0; i < M; ++i) q *= 3;
        return pow(q - 2);
    }

    friend bool operator==(const GF3Ext& a, const GF3Ext& b) { return a.c == b.c; }
    friend bool operator!=(const GF3Ext& a, const GF3Ext& b) { return a.c != b.c; }
};

using GF3x = GF3Ext<8>;

}  // namespace siegel3

#endif
