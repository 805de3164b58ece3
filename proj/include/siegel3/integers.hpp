// Arbitrary-precision integers and rationals for the characteristic-0 pipeline.
#ifndef SIEGEL3_INTEGERS_HPP
#define SIEGEL3_INTEGERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "siegel3/gf3.hpp"

namespace siegel3 {

using ZZ = boost::multiprecision::cpp_int;
using QQ = boost::multiprecision::cpp_rational;

inline GF3 reduce_scalar_mod3(const ZZ& x) {
    ZZ r = x % 3;
    if (r < 0) r += 3;
    return GF3(static_cast<uint8_t>(r));
}

// Coefficient-domain traits used by SparsePoly.
template <class C>
struct domain_traits;

template <>
struct domain_traits<GF3> {
    static constexpr const char* name = "GF3";
    static constexpr bool is_field = true;
    static GF3 zero() { return GF3{}; }
    static GF3 one() { return GF3(1); }
    static std::string to_string(GF3 c) { return std::to_string(int(c.v)); }
};

template <int M>
struct domain_traits<GF3Ext<M>> {
    static constexpr const char* name = "GF3m";
    static constexpr bool is_field = true;
    static GF3Ext<M> zero() { return GF3Ext<M>::zero(); }
    static GF3Ext<M> one() { return GF3Ext<M>::one(); }
    // base-3 packed integer encoding of the residue
    static std::string to_string(const GF3Ext<M>& c) {
        unsigned long long n = 0, p = 1;
        for (int i = 0; i < M; ++i) {
            n += c.c[i] * p;
            p *= 3;
        }
        return std::to_string(n);
    }
};

template <>
struct domain_traits<ZZ> {
    static constexpr const char* name = "Z";
    static constexpr bool is_field = false;
    static ZZ zero() { return ZZ(0); }
    static ZZ one() { return ZZ(1); }
    static std::string to_string(const ZZ& c) { return c.str(); }
};

template <>
struct domain_traits<QQ> {
    static constexpr const char* name = "Q";
    static constexpr bool is_field = true;
    static QQ zero() { return QQ(0); }
    static QQ one() { return QQ(1); }
    static std::string to_string(const QQ& c) { return c.str(); }
};

}  // namespace siegel3

#endif
