// Variable sets and monomials under the fixed graded reverse-lexicographic order
// with a0 > a1 > ... > a6 > x1 > x2 (and t ordered after the a-block it extends).
#ifndef SIEGEL3_MONOMIAL_HPP
#define SIEGEL3_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegel3 {

constexpr uint32_t kMaxExponent = 0x7fffffffu;  // 2^31 - 1

class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty() || names_.size() > kMaxVars)
            throw std::invalid_argument("VarSet: need 1..12 variables");
    }

    static constexpr size_t kMaxVars = 12;

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    int index_of(const std::string& nm) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == nm) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const VarSet& o) const { return names_ == o.names_; }

    // Interned instances: pointer equality == content equality.
    static const VarSet* intern(std::vector<std::string> names);

    // a0..a6 — invariants of the binary sextic
    static const VarSet* invariant() {
        static const VarSet* v = intern({"a0", "a1", "a2", "a3", "a4", "a5", "a6"});
        return v;
    }
    // a0..a6, t — images under a one-parameter unipotent substitution
    static const VarSet* invariant_t() {
        static const VarSet* v = intern({"a0", "a1", "a2", "a3", "a4", "a5", "a6", "t"});
        return v;
    }
    // a0..a6, x1, x2 — binary forms with invariant coefficients
    static const VarSet* form() {
        static const VarSet* v = intern({"a0", "a1", "a2", "a3", "a4", "a5", "a6", "x1", "x2"});
        return v;
    }
    // a0..a6, x1, x2, t
    static const VarSet* form_t() {
        static const VarSet* v =
            intern({"a0", "a1", "a2", "a3", "a4", "a5", "a6", "x1", "x2", "t"});
        return v;
    }

private:
    std::vector<std::string> names_;
};

inline const VarSet* VarSet::intern(std::vector<std::string> names) {
    static std::mutex mu;
    static std::vector<std::unique_ptr<VarSet>> pool;
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& p : pool)
        if (p->names() == names) return p.get();
    pool.push_back(std::make_unique<VarSet>(std::move(names)));
    return pool.back().get();
}

struct Monomial {
    std::array<uint32_t, VarSet::kMaxVars> e{};
    uint8_t nvars{0};
    uint64_t deg{0};  // cached total degree

    Monomial() = default;
    explicit Monomial(uint8_t n) : nvars(n) {}

    static Monomial unit(uint8_t nvars) { return Monomial(nvars); }
    static Monomial var(uint8_t nvars, size_t i, uint32_t exp = 1) {
        Monomial m(nvars);
        m.e[i] = exp;
        m.deg = exp;
        return m;
    }

    void recompute_degree() {
        deg = 0;
        for (size_t i = 0; i < nvars; ++i) deg += e[i];
    }

    bool operator==(const Monomial& o) const {
        if (nvars != o.nvars || deg != o.deg) return false;
        for (size_t i = 0; i < nvars; ++i)
            if (e[i] != o.e[i]) return false;
        return true;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

// -1: a < b, 0: equal, +1: a > b under grevlex.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = static_cast<int>(a.nvars) - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

inline bool grevlex_less(const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) < 0; }

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars);
    for (size_t i = 0; i < a.nvars; ++i) {
        uint64_t s = static_cast<uint64_t>(a.e[i]) + b.e[i];
        if (s > kMaxExponent) throw std::overflow_error("Monomial: exponent overflow");
        r.e[i] = static_cast<uint32_t>(s);
    }
    r.deg = a.deg + b.deg;
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // does a divide b?
    for (size_t i = 0; i < a.nvars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial mono_quotient(const Monomial& b, const Monomial& a) {
    Monomial r(a.nvars);
    for (size_t i = 0; i < a.nvars; ++i) r.e[i] = b.e[i] - a.e[i];
    r.deg = b.deg - a.deg;
    return r;
}

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        uint64_t h = 0x9E3779B97F4A7C15ull ^ m.nvars;
        for (size_t i = 0; i < m.nvars; ++i) {
            h ^= m.e[i] + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h *= 0xBF58476D1CE4E5B9ull;
        }
        return static_cast<size_t>(h ^ (h >> 31));
    }
};

}  // namespace siegel3

#endif
