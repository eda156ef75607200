#pragma once

#include <map>
#include <utility>
#include <vector>

#include "urcode/numeric.hpp"

namespace urcode {

// Exact univariate polynomial over the rationals, canonical form (no zero
// coefficients stored). The degree of the zero polynomial is -1.
class Poly {
   public:
    Poly() = default;

    static Poly constant(Rat c) {
        Poly p;
        if (sgn(c) != 0) p.terms_[0] = std::move(c);
        return p;
    }
    static Poly constant(const Int& c) { return constant(Rat(c)); }
    static Poly monomial(Rat c, unsigned long k) {
        Poly p;
        if (sgn(c) != 0) p.terms_[k] = std::move(c);
        return p;
    }
    static Poly x() { return monomial(Rat(1), 1); }

    bool is_zero() const { return terms_.empty(); }

    // -1 for the zero polynomial.
    long degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first); }

    Rat coeff(unsigned long k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat leading() const { return terms_.empty() ? Rat(0) : terms_.rbegin()->second; }
    Rat constant_term() const { return coeff(0); }

    const std::map<unsigned long, Rat>& terms() const { return terms_; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }

    Poly operator-() const {
        Poly r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [k1, c1] : terms_)
            for (const auto& [k2, c2] : o.terms_) r.add_term(k1 + k2, c1 * c2);
        return r;
    }

    Poly operator*(const Rat& s) const {
        Poly r;
        if (sgn(s) == 0) return r;
        for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
        return r;
    }

    Rat eval(const Rat& at) const {
        Rat acc(0);
        long d = degree();
        for (long k = d; k >= 0; --k) acc = acc * at + coeff(static_cast<unsigned long>(k));
        return acc;
    }

    // Substitutes q for X (polynomial composition), by Horner.
    Poly subst(const Poly& q) const {
        Poly acc;
        long d = degree();
        for (long k = d; k >= 0; --k)
            acc = acc * q + Poly::constant(coeff(static_cast<unsigned long>(k)));
        return acc;
    }

    // Quotient by X of (p - p(0)); the P' of the split p = P'*X + p(0).
    Poly shift_down() const {
        Poly r;
        for (const auto& [k, c] : terms_)
            if (k >= 1) r.terms_[k - 1] = c;
        return r;
    }

    // Multiplication by X.
    Poly shift_up() const {
        Poly r;
        for (const auto& [k, c] : terms_) r.terms_[k + 1] = c;
        return r;
    }

    // Sign under the dominance order: sign of the leading coefficient.
    int dominance_sign() const { return terms_.empty() ? 0 : sgn(terms_.rbegin()->second); }

    // Euclidean division in Q[X]: *this = q*b + r with deg r < deg b.
    std::pair<Poly, Poly> divmod_qx(const Poly& b) const {
        if (b.is_zero()) throw DivisionByZero();
        Poly q, r = *this;
        const long db = b.degree();
        const Rat lb = b.leading();
        while (!r.is_zero() && r.degree() >= db) {
            unsigned long k = static_cast<unsigned long>(r.degree() - db);
            Rat c = r.leading() / lb;
            Poly t = monomial(c, k);
            q = q + t;
            r = r - t * b;
        }
        return {q, r};
    }

    // All coefficients integral.
    bool has_integer_coeffs() const {
        for (const auto& [k, c] : terms_)
            if (!rat_is_integer(c)) return false;
        return true;
    }

   private:
    void add_term(unsigned long k, const Rat& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (sgn(c) != 0) terms_[k] = c;
        } else {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    std::map<unsigned long, Rat> terms_;
};

inline Poly operator*(const Rat& s, const Poly& p) { return p * s; }

// Forward differences p(0), (Δp)(0), ..., (Δ^d p)(0). Empty for p = 0.
inline std::vector<Rat> forward_differences(const Poly& p) {
    std::vector<Rat> row;
    long d = p.degree();
    if (d < 0) return {};
    for (long i = 0; i <= d; ++i) row.push_back(p.eval(Rat(i)));
    std::vector<Rat> out;
    out.reserve(row.size());
    while (!row.empty()) {
        out.push_back(row.front());
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
    }
    return out;
}

// Binomial coefficient polynomial C(X, k) = X(X-1)...(X-k+1)/k!.
inline Poly binomial_poly(unsigned long k) {
    Poly p = Poly::constant(Rat(1));
    for (unsigned long i = 0; i < k; ++i)
        p = p * (Poly::x() - Poly::constant(Rat(static_cast<long>(i))));
    return p * make_rat(1, factorial(k));
}

}  // namespace urcode
