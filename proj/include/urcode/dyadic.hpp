#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "urcode/numeric.hpp"

namespace urcode {

// Smullyan coding: the length-first bijection between {a,b}-strings and N.
// Arithmetic on codes mirrors the string operations: concatenation is
// m*ell(n)+n and the tally of n is ell(n)-1, where ell(n) is the largest
// power of 2 at most n+1 (equivalently 2^length).

inline Int sm_encode(const std::string& word) {
    require_word(word, "ab");
    Int n = 0;
    for (char ch : word) n = 2 * n + (ch == 'a' ? 1 : 2);
    return n;
}

inline std::string sm_decode(Int n) {
    std::string out;
    while (sgn(n) > 0) {
        if (is_odd(n)) {
            out.push_back('a');
            n = (n - 1) / 2;
        } else {
            out.push_back('b');
            n = (n - 2) / 2;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// Largest power of two <= n+1; equals 2^(dyadic length of n).
inline Int ell(const Int& n) {
    Int m = n + 1;
    mp_bitcnt_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    Int p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), bits - 1);
    return p;
}

inline Int dyad_concat(const Int& m, const Int& n) { return m * ell(n) + n; }

// Code of the all-a word of the same length.
inline Int lambda_tally(const Int& n) { return ell(n) - 1; }

inline bool is_b_free(const Int& n) { return n == lambda_tally(n); }

// <x,y> = Lambda(x) b x y, injective in (x, y).
inline Int dyad_pair(const Int& x, const Int& y) {
    return dyad_concat(dyad_concat(dyad_concat(lambda_tally(x), 2), x), y);
}

// Splits x as u*v with Lambda(v) = tally; unique by left cancellation.
// The codes of words of length t form the window [2^t - 1, 2^(t+1) - 2],
// so the suffix is the unique representative of x mod 2^t in that window.
inline std::pair<Int, Int> dyad_split_at(const Int& x, const Int& tally) {
    if (!is_b_free(tally)) throw PreconditionViolated("dyad_split_at: tally contains b");
    Int lv = ell(tally);
    Int lx = ell(x);
    if (lv > lx) throw PreconditionViolated("dyad_split_at: tally longer than the string");
    Int v = (x - (lv - 1)) % lv + (lv - 1);
    Int u = (x - v) / lv;
    return {u, v};
}

// Mask/payload ur-string of naturals. The mask is b a^{k_0} b a^{k_1} ...
// with k_i the length of the i-th component; the payload is b w_0 b w_1 ...
// The mask's b positions must carry b in the payload as well.
struct SmUrString {
    Int mask;
    Int payload;
    bool operator==(const SmUrString&) const = default;
};

namespace detail {

inline void validate_sm_urstring(const SmUrString& s) {
    std::string m = sm_decode(s.mask);
    std::string p = sm_decode(s.payload);
    if (m.size() != p.size()) throw InvalidUrString("mask and payload lengths differ");
    if (!m.empty() && m[0] != 'b') throw InvalidUrString("mask does not start with b");
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] == 'b' && p[i] != 'b')
            throw InvalidUrString("payload missing separator at mask position " +
                                  std::to_string(i));
}

}  // namespace detail

inline SmUrString urs_empty() { return SmUrString{0, 0}; }

inline SmUrString urs_singleton(const Int& n) {
    return SmUrString{dyad_concat(2, lambda_tally(n)), dyad_concat(2, n)};
}

inline SmUrString urs_concat(const SmUrString& a, const SmUrString& b) {
    detail::validate_sm_urstring(a);
    detail::validate_sm_urstring(b);
    return SmUrString{dyad_concat(a.mask, b.mask), dyad_concat(a.payload, b.payload)};
}

// The Frege function: pairs the two underlying strings.
inline Int urs_frege(const SmUrString& a) {
    detail::validate_sm_urstring(a);
    return dyad_pair(a.mask, a.payload);
}

inline std::vector<Int> urs_decode(const SmUrString& a) {
    std::string m = sm_decode(a.mask);
    std::string p = sm_decode(a.payload);
    if (m.size() != p.size()) throw Malformed("mask and payload lengths differ");
    if (!m.empty() && m[0] != 'b') throw Malformed("mask does not start with b");
    std::vector<Int> out;
    std::size_t i = 0;
    while (i < m.size()) {
        if (m[i] != 'b' || p[i] != 'b') throw Malformed("mask/payload disagree");
        std::size_t j = i + 1;
        while (j < m.size() && m[j] == 'a') ++j;
        out.push_back(sm_encode(p.substr(i + 1, j - i - 1)));
        i = j;
    }
    return out;
}

// Given a*b = c*d (as ur-strings), produces the mediating ur-string.
// Left: a*eta = c and b = eta*d. Right: a = c*eta and eta*b = d.
inline std::pair<Side, SmUrString> urs_editors_split(const SmUrString& a, const SmUrString& b,
                                                     const SmUrString& c, const SmUrString& d) {
    detail::validate_sm_urstring(a);
    detail::validate_sm_urstring(b);
    detail::validate_sm_urstring(c);
    detail::validate_sm_urstring(d);
    if (urs_concat(a, b) != urs_concat(c, d))
        throw PreconditionViolated("urs_editors_split: products differ");

    auto suffix_beyond = [](const SmUrString& longer, const SmUrString& shorter) {
        Int t_mask = ell(longer.mask) / ell(shorter.mask) - 1;
        Int t_payload = ell(longer.payload) / ell(shorter.payload) - 1;
        auto [mu, mv] = dyad_split_at(longer.mask, t_mask);
        auto [pu, pv] = dyad_split_at(longer.payload, t_payload);
        if (mu != shorter.mask || pu != shorter.payload)
            throw PreconditionViolated("urs_editors_split: prefix relation failed");
        return SmUrString{mv, pv};
    };

    if (ell(a.mask) <= ell(c.mask)) {
        SmUrString eta = suffix_beyond(c, a);
        detail::validate_sm_urstring(eta);
        return {Side::Left, eta};
    }
    SmUrString eta = suffix_beyond(a, c);
    detail::validate_sm_urstring(eta);
    return {Side::Right, eta};
}

}  // namespace urcode
