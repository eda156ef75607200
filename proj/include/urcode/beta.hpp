#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "urcode/numeric.hpp"

namespace urcode {

// Godel sequence coding over N: the pairing <x,y> = (x+y)^2 + x, the beta
// relation, and list encode/decode on top of them. Codes are not minimal
// and not extensional; only the projections matter.

inline Int cantor_pair(const Int& x, const Int& y) {
    Int s = x + y;
    return s * s + x;
}

inline std::optional<std::pair<Int, Int>> cantor_unpair(const Int& p) {
    if (sgn(p) < 0) return std::nullopt;
    Int s = floor_sqrt(p);
    Int x = p - s * s;
    if (x > s) return std::nullopt;
    return std::make_pair(x, s - x);
}

struct BetaSeq {
    Int code;
    bool operator==(const BetaSeq&) const = default;
};

// The unique x < 1+(i+1)v with u = q*(1+(i+1)v) + x, for w = <u,v>.
// The strict remainder bound is what makes the relation functional.
inline Int beta_get(const Int& w, const Int& i) {
    auto uv = cantor_unpair(w);
    if (!uv) throw NotAPair();
    const auto& [u, v] = *uv;
    Int m = 1 + (i + 1) * v;
    return u % m;
}

namespace detail {

// Inverse of a small s >= 1 modulo m, gcd(s, m) = 1: w = (1 + m*k)/s for
// the k in [0, s) with m*k = -1 mod s. Avoids a full bignum ext-gcd.
inline Int inv_small_mod(unsigned long s, const Int& m) {
    if (s == 1) return Int(1) % m;
    unsigned long r = mpz_fdiv_ui(m.get_mpz_t(), s);
    long t0 = 0, t1 = 1;
    long a = static_cast<long>(s), b = static_cast<long>(r);
    while (b != 0) {
        long q = a / b;
        long tmp = a - q * b;
        a = b;
        b = tmp;
        long tt = t0 - q * t1;
        t0 = t1;
        t1 = tt;
    }
    long invr = t0 % static_cast<long>(s);
    if (invr < 0) invr += static_cast<long>(s);
    unsigned long k = (s - static_cast<unsigned long>(invr)) % s;
    return (1 + m * k) / s;
}

}  // namespace detail

// Encodes xs as <n, <u, v>> where the moduli m_i = 1+(i+1)v are pairwise
// coprime and exceed every element, and u is the CRT solution of
// u = xs[i] mod m_i. v := c * lcm(1..n) with c := max(n, max element)+1,
// which meets both requirements at desk scale.
inline BetaSeq beta_encode(const std::vector<Int>& xs) {
    const std::size_t n = xs.size();
    if (n == 0) return BetaSeq{0};

    Int c = Int(static_cast<unsigned long>(n));
    for (const Int& x : xs)
        if (x > c) c = x;
    c += 1;
    Int v = c * lcm_upto(static_cast<unsigned long>(n));

    // Incremental CRT. The moduli satisfy m_j = (i-j) * inv(j+1) mod m_i,
    // so the inverse of M = m_0*...*m_{i-1} mod m_i is (i+1)^i / i!,
    // which needs only a small-integer inversion.
    std::vector<Int> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = 1 + Int(static_cast<unsigned long>(i + 1)) * v;
    Int u = xs[0] % m[0];
    Int big = m[0];
    for (std::size_t i = 1; i < n; ++i) {
        unsigned long fact = 1;
        for (unsigned long j = 2; j <= i; ++j) fact *= j;
        Int inv = detail::inv_small_mod(fact, m[i]);
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(i + 1),
                      static_cast<unsigned long>(i));
        inv = inv * pw % m[i];
        Int t = (xs[i] - u) % m[i] * inv % m[i];
        if (sgn(t) < 0) t += m[i];
        u += big * t;
        big *= m[i];
    }

    Int w = cantor_pair(u, v);
    return BetaSeq{cantor_pair(Int(static_cast<unsigned long>(n)), w)};
}

namespace detail {

inline std::pair<Int, Int> split_seq(const BetaSeq& s) {
    auto zw = cantor_unpair(s.code);
    if (!zw) throw NotASequence();
    auto uv = cantor_unpair(zw->second);
    if (!uv) throw NotASequence();
    return *zw;
}

}  // namespace detail

inline Int beta_length(const BetaSeq& s) { return detail::split_seq(s).first; }

inline Int beta_project(const BetaSeq& s, const Int& i) {
    auto [z, w] = detail::split_seq(s);
    if (i >= z) throw IndexOutOfRange();
    return beta_get(w, i);
}

inline std::vector<Int> beta_decode(const BetaSeq& s) {
    auto [z, w] = detail::split_seq(s);
    std::vector<Int> out;
    for (Int i = 0; i < z; ++i) out.push_back(beta_get(w, i));
    return out;
}

// Append via meta-level re-encoding; the resulting code represents the
// extended list but shares nothing with the original code.
inline BetaSeq beta_append(const BetaSeq& s, const Int& x) {
    std::vector<Int> xs = beta_decode(s);
    xs.push_back(x);
    return beta_encode(xs);
}

}  // namespace urcode
