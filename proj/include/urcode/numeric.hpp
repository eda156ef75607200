#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "urcode/errors.hpp"

namespace urcode {

using Int = mpz_class;
using Rat = mpq_class;

inline Int floor_sqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int lcm_upto(unsigned long n) {
    Int r = 1;
    for (unsigned long k = 2; k <= n; ++k) r = lcm(r, Int(k));
    return r;
}

// x is a positive power of two.
inline bool is_power_of_two(const Int& x) {
    return sgn(x) > 0 && mpz_popcount(x.get_mpz_t()) == 1;
}

inline bool is_odd(const Int& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

// Floor of a rational.
inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rat& q) {
    if (rat_is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses a decimal natural number; rejects signs and garbage.
inline Int parse_nat(const std::string& text) {
    if (text.empty()) throw ParseError(0, "decimal digits");
    for (std::size_t i = 0; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') throw ParseError(i, "decimal digit");
    return Int(text, 10);
}

// Which disjunct of an Editors split holds: Left means the witness extends
// the first prefix (x*w = u, y = w*v), Right means it extends the second
// (x = u*w, w*y = v).
enum class Side { Left, Right };

inline void require_word(const std::string& w, const std::string& alphabet) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (alphabet.find(w[i]) == std::string::npos)
            throw ParseError(i, "letter from {" + alphabet + "}");
}

}  // namespace urcode
