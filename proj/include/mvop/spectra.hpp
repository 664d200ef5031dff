#pragma once

#include <array>
#include <cstdlib>
#include <vector>

#include "mvop/errors.hpp"
#include "mvop/rational.hpp"

namespace mvop {

enum class Parity { Even, Odd };

/// Dominant integral highest weight for SO(2l) (even) or SO(2l+1) (odd).
/// Odd parity demands m1 >= ... >= ml >= 0; even parity allows a signed
/// last entry with m_{l-1} >= |m_l|.
struct HighestWeight {
    Parity parity = Parity::Odd;
    std::vector<long> entries;

    int rank() const { return static_cast<int>(entries.size()); }
    int so_n() const { return parity == Parity::Even ? 2 * rank() : 2 * rank() + 1; }

    bool valid() const {
        if (entries.empty()) return false;
        for (size_t i = 0; i + 1 < entries.size(); ++i)
            if (entries[i] < entries[i + 1]) {
                if (parity == Parity::Even && i + 2 == entries.size())
                    return entries[i] >= std::labs(entries[i + 1]);
                return false;
            }
        if (parity == Parity::Odd) return entries.back() >= 0;
        if (entries.size() >= 2) return entries[entries.size() - 2] >= std::labs(entries.back());
        return true;
    }

    /// Weight of SO(n); n fixes the parity and the expected rank.
    static HighestWeight for_so(int n, std::vector<long> m) {
        if (n < 2) throw DomainError("HighestWeight: need n >= 2");
        HighestWeight w;
        w.parity = (n % 2 == 0) ? Parity::Even : Parity::Odd;
        w.entries = std::move(m);
        if (w.rank() != n / 2) throw DomainError("HighestWeight: rank does not match SO(n)");
        if (!w.valid()) throw DomainError("HighestWeight: dominance violated");
        return w;
    }

    friend bool operator==(const HighestWeight& a, const HighestWeight& b) {
        return a.parity == b.parity && a.entries == b.entries;
    }
};

/// Spectral parameter (w, delta) of one spherical function.
struct EigKey {
    long w = 0;
    int delta = 0;
};

inline Rational casimir_even(int ell, const HighestWeight& m) {
    if (m.parity != Parity::Even || m.rank() != ell)
        throw DomainError("casimir_even: weight is not an SO(2l) weight of rank l");
    Rational acc(0);
    for (int j = 1; j <= ell; ++j) {
        long mj = m.entries[j - 1];
        acc += Rational(-mj * mj - 2 * (ell - j) * mj);
    }
    return acc;
}

inline Rational casimir_odd(int ell, const HighestWeight& m) {
    if (m.parity != Parity::Odd || m.rank() != ell)
        throw DomainError("casimir_odd: weight is not an SO(2l+1) weight of rank l");
    Rational acc(0);
    for (int j = 1; j <= ell; ++j) {
        long mj = m.entries[j - 1];
        acc += Rational(-mj * mj - (2 * (ell - j) + 1) * mj);
    }
    return acc;
}

inline Rational casimir(const HighestWeight& m) {
    return m.parity == Parity::Even ? casimir_even(m.rank(), m) : casimir_odd(m.rank(), m);
}

/// Eigenvalue of the radial Casimir-difference operator:
/// -w(w+n+1)-p for delta = 0, -w(w+n+1)-(n-p) for delta = +-1.
inline Rational delta_eigenvalue(int n, int p, const EigKey& key) {
    if (n < 3) throw DomainError("delta_eigenvalue: need n >= 3");
    if (p < 1 || p > n / 2) throw DomainError("delta_eigenvalue: p out of range");
    if (key.w < 0) throw DomainError("delta_eigenvalue: w must be nonnegative");
    if (key.w > 1000000) throw DomainError("delta_eigenvalue: w out of supported range");
    if (key.delta != 0 && key.delta != 1 && key.delta != -1)
        throw DomainError("delta_eigenvalue: delta out of range");
    if (key.delta == -1 && !(n % 2 == 1 && p == (n - 1) / 2))
        throw DomainError("delta_eigenvalue: delta = -1 only for the odd-n top type");
    long base = key.w * (key.w + n + 1);
    return Rational(key.delta == 0 ? -base - p : -base - (n - p));
}

/// Betweenness test: does m_k (an SO(n) weight) sit under m_top (SO(n+1))?
inline bool interlaces(const HighestWeight& m_top, const HighestWeight& m_k) {
    const auto& t = m_top.entries;
    const auto& k = m_k.entries;
    if (m_top.parity == Parity::Odd) {
        // SO(2l+1) over SO(2l): t1 >= k1 >= t2 >= ... >= tl >= kl >= -tl
        if (m_k.parity != Parity::Even || m_k.rank() != m_top.rank()) return false;
        for (int i = 0; i < m_top.rank(); ++i) {
            if (t[i] < k[i]) return false;
            if (i + 1 < m_top.rank() && k[i] < t[i + 1]) return false;
        }
        return k.back() >= -t.back();
    }
    // SO(2l) over SO(2l-1): t1 >= k1 >= t2 >= ... >= k_{l-1} >= |tl|
    if (m_k.parity != Parity::Odd || m_k.rank() != m_top.rank() - 1) return false;
    for (int i = 0; i < m_k.rank(); ++i) {
        if (t[i] < k[i]) return false;
        if (i + 1 < m_k.rank() && k[i] < t[i + 1]) return false;
    }
    return k.back() >= std::labs(t.back());
}

/// Eigenvalue computed as the Casimir difference between the two groups.
inline Rational delta_eigenvalue_via_casimir(int n, const HighestWeight& m_top,
                                             const HighestWeight& m_k) {
    if (m_top.so_n() != n + 1 || m_k.so_n() != n)
        throw DomainError("delta_eigenvalue_via_casimir: ranks do not match n");
    if (!interlaces(m_top, m_k))
        throw DomainError("delta_eigenvalue_via_casimir: weights do not interlace");
    return casimir(m_top) - casimir(m_k);
}

/// All SO(n-1) weights interlacing m, ascending lexicographic, each once.
inline std::vector<HighestWeight> branch(int n, const HighestWeight& m) {
    if (n < 3) throw DomainError("branch: need n >= 3");
    if (m.so_n() != n) throw DomainError("branch: weight does not belong to SO(n)");
    if (!m.valid()) throw DomainError("branch: invalid weight");
    const auto& e = m.entries;
    std::vector<std::pair<long, long>> ranges;  // inclusive [lo, hi] per coordinate
    Parity out_parity;
    if (m.parity == Parity::Odd) {
        // down to SO(2l), rank l, last entry in [-ml, ml]
        out_parity = Parity::Even;
        for (int i = 0; i + 1 < m.rank(); ++i) ranges.emplace_back(e[i + 1], e[i]);
        ranges.emplace_back(-e.back(), e.back());
    } else {
        // down to SO(2l-1), rank l-1, last entry >= |ml|
        out_parity = Parity::Odd;
        for (int i = 0; i + 2 < m.rank(); ++i) ranges.emplace_back(e[i + 1], e[i]);
        ranges.emplace_back(std::labs(e.back()), e[m.rank() - 2]);
    }
    std::vector<HighestWeight> out;
    std::vector<long> cur(ranges.size());
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == ranges.size()) {
            out.push_back(HighestWeight{out_parity, cur});
            return;
        }
        for (long v = ranges[i].first; v <= ranges[i].second; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// M-submodule dimensions of the two-part fundamental type:
/// (C(n-1, p-1), C(n-1, p)); they sum to C(n, p).
inline std::pair<long, long> fundamental_dims(int n, int p) {
    int pmax = (n % 2 == 1) ? (n - 1) / 2 : n / 2 - 1;
    if (p < 1 || p > pmax) throw DomainError("fundamental_dims: p out of range");
    Rational d1 = binomial(n - 1, p - 1);
    Rational d2 = binomial(n - 1, p);
    return {d1.numerator().get_si(), d2.numerator().get_si()};
}

/// M-submodule dimensions of the odd-n top type, from the three-part
/// exterior-power decomposition: d1 = d3 = C(2l,l)/2, d2 = C(2l,l-1).
inline std::array<long, 3> top_dims(int ell) {
    if (ell < 1) throw DomainError("top_dims: need l >= 1");
    Rational half = binomial(2 * ell, ell) / Rational(2);
    Rational mid = binomial(2 * ell, ell - 1);
    return {half.numerator().get_si(), mid.numerator().get_si(), half.numerator().get_si()};
}

}  // namespace mvop
