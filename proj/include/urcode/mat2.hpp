#pragma once

#include <optional>
#include <string>
#include <utility>

#include "urcode/model.hpp"

namespace urcode {

enum class Letter { Empty, A, B };

inline char letter_char(Letter l) { return l == Letter::A ? 'a' : 'b'; }

// Signed 2x2 matrix over Q[X]; the workspace for inverses and the
// mediating matrices of Editors splits.
struct RawMat {
    Poly a, b, c, d;

    RawMat operator*(const RawMat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Poly det() const { return a * d - b * c; }
    // Inverse under det = 1.
    RawMat inv_unimodular() const { return {d, -b, -c, a}; }
    bool nonnegative() const {
        return a.dominance_sign() >= 0 && b.dominance_sign() >= 0 && c.dominance_sign() >= 0 &&
               d.dominance_sign() >= 0;
    }
    bool operator==(const RawMat&) const = default;
};

// Element of the special linear monoid over a model: entries are members
// of the model and a*d = b*c + 1.
class Mat2 {
   public:
    Mat2(ModelId m, Poly a, Poly b, Poly c, Poly d)
        : model_(m), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        for (const Poly* p : {&a_, &b_, &c_, &d_})
            if (!is_member(model_, *p))
                throw NotMember("matrix entry " + render_poly(*p) + " is not in " +
                                model_name(model_));
        if (a_ * d_ != b_ * c_ + Poly::constant(Rat(1)))
            throw NotMember("matrix determinant is not 1");
    }

    static Mat2 identity(ModelId m) {
        return Mat2(m, Poly::constant(Rat(1)), Poly(), Poly(), Poly::constant(Rat(1)));
    }
    static Mat2 atom_a(ModelId m) {
        return Mat2(m, Poly::constant(Rat(1)), Poly::constant(Rat(1)), Poly(),
                    Poly::constant(Rat(1)));
    }
    static Mat2 atom_b(ModelId m) {
        return Mat2(m, Poly::constant(Rat(1)), Poly(), Poly::constant(Rat(1)),
                    Poly::constant(Rat(1)));
    }
    static Mat2 from_raw(ModelId m, const RawMat& r) { return Mat2(m, r.a, r.b, r.c, r.d); }

    ModelId model() const { return model_; }
    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }
    const Poly& c() const { return c_; }
    const Poly& d() const { return d_; }
    RawMat raw() const { return {a_, b_, c_, d_}; }

    bool is_identity() const {
        return b_.is_zero() && c_.is_zero() && a_ == Poly::constant(Rat(1)) &&
               d_ == Poly::constant(Rat(1));
    }

    bool operator==(const Mat2& o) const {
        return model_ == o.model_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

   private:
    ModelId model_;
    Poly a_, b_, c_, d_;
};

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    if (x.model() != y.model()) throw ModelMismatch();
    return Mat2::from_raw(x.model(), x.raw() * y.raw());
}

// A^n = [[1,n],[0,1]]; tally numerals grow linearly.
inline Mat2 pow_a(ModelId m, const ModelElem& n) {
    if (n.model() != m) throw ModelMismatch();
    return Mat2(m, Poly::constant(Rat(1)), n.value(), Poly(), Poly::constant(Rat(1)));
}

inline Mat2 pow_b(ModelId m, const ModelElem& n) {
    if (n.model() != m) throw ModelMismatch();
    return Mat2(m, Poly::constant(Rat(1)), Poly(), n.value(), Poly::constant(Rat(1)));
}

inline Mat2 encode_string(ModelId m, const std::string& word) {
    require_word(word, "ab");
    Mat2 acc = Mat2::identity(m);
    for (char ch : word) acc = mat_mul(acc, ch == 'a' ? Mat2::atom_a(m) : Mat2::atom_b(m));
    return acc;
}

namespace detail {

// Column ordering <a c> < <b d>: (a<b and c<=d) or (a<=b and c<d).
inline bool col_lt(const Poly& a, const Poly& c, const Poly& b, const Poly& d) {
    int ab = (b - a).dominance_sign();
    int cd = (d - c).dominance_sign();
    return (ab > 0 && cd >= 0) || (ab >= 0 && cd > 0);
}

}  // namespace detail

// Trichotomy: the empty string, or the last letter read off the columns.
// Exclusive on discrete models; matrices of the non-discrete backend can
// fail to end in a letter at all.
inline Letter last_letter(const Mat2& m) {
    if (m.is_identity()) return Letter::Empty;
    if (detail::col_lt(m.a(), m.c(), m.b(), m.d())) return Letter::A;
    if (detail::col_lt(m.b(), m.d(), m.a(), m.c())) return Letter::B;
    throw DomainViolation("matrix has no last letter");
}

// Removes the last letter: multiply by the inverse atom, which stays in
// the monoid by the column ordering.
inline std::pair<Mat2, Letter> pop_letter(const Mat2& m) {
    Letter l = last_letter(m);
    if (l == Letter::Empty) throw EmptyString();
    if (l == Letter::A)
        return {Mat2(m.model(), m.a(), m.b() - m.a(), m.c(), m.d() - m.c()), Letter::A};
    return {Mat2(m.model(), m.a() - m.b(), m.b(), m.c() - m.d(), m.d()), Letter::B};
}

// Decodes a matrix whose entries are all numerals back to its word.
inline std::string decode_string(Mat2 m) {
    for (const Poly* p : {&m.a(), &m.b(), &m.c(), &m.d()})
        if (p->degree() > 0) throw DomainViolation("matrix is not a finite string");
    std::string out;
    while (!m.is_identity()) {
        auto [rest, l] = pop_letter(m);
        out.push_back(letter_char(l));
        m = rest;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// Quantifier-free initial-prefix test: alpha^-1 * beta has non-negative
// entries iff some gamma in the monoid has alpha*gamma = beta.
inline bool is_prefix_qf(const Mat2& x, const Mat2& y) {
    if (x.model() != y.model()) throw ModelMismatch();
    const Poly &a = x.a(), &b = x.b(), &c = x.c(), &d = x.d();
    const Poly &e = y.a(), &f = y.b(), &g = y.c(), &h = y.d();
    return (d * e - b * g).dominance_sign() >= 0 && (d * f - b * h).dominance_sign() >= 0 &&
           (a * g - c * e).dominance_sign() >= 0 && (a * h - c * f).dominance_sign() >= 0;
}

struct EditorsOutcome {
    bool found;
    Side side;                    // Left: x*w = u, y = w*v.  Right: x = u*w, w*y = v.
    std::optional<Mat2> witness;  // present iff found
    RawMat mu;                    // gamma^-1 * alpha, for failure analysis
};

// Editors split for x*y = u*v. The mediating matrix is mu = u^-1 * x; its
// diagonal is positive, and on a discrete model either mu or its inverse
// is non-negative. On the non-discrete backend both may fail, in which
// case mu is reported without a witness.
inline EditorsOutcome editors_split(const Mat2& x, const Mat2& y, const Mat2& u, const Mat2& v) {
    for (const Mat2* p : {&y, &u, &v})
        if (p->model() != x.model()) throw ModelMismatch();
    if (mat_mul(x, y) != mat_mul(u, v))
        throw PreconditionViolated("editors_split: products differ");

    RawMat mu = u.raw().inv_unimodular() * x.raw();
    if (mu.a.dominance_sign() <= 0 || mu.d.dominance_sign() <= 0)
        throw std::logic_error("editors_split: mediating diagonal not positive");

    if (mu.nonnegative())
        return {true, Side::Right, Mat2::from_raw(x.model(), mu), mu};
    RawMat mu_inv = mu.inv_unimodular();
    if (mu_inv.nonnegative())
        return {true, Side::Left, Mat2::from_raw(x.model(), mu_inv), mu};
    if (is_discrete(x.model()))
        throw std::logic_error("editors_split: no witness on a discrete model");
    return {false, Side::Left, std::nullopt, mu};
}

// Transpose: reverses the word and swaps the letters.
inline Mat2 transpose(const Mat2& m) {
    return Mat2(m.model(), m.a(), m.c(), m.b(), m.d());
}

// Anti-transpose (about the anti-diagonal): reverses the word, keeps letters.
inline Mat2 anti_transpose(const Mat2& m) {
    return Mat2(m.model(), m.d(), m.b(), m.c(), m.a());
}

inline std::string render_mat(const Mat2& m) {
    return "[[" + render_poly(m.a()) + "," + render_poly(m.b()) + "],[" + render_poly(m.c()) +
           "," + render_poly(m.d()) + "]]";
}

inline std::string render_raw(const RawMat& m) {
    return "[[" + render_poly(m.a) + "," + render_poly(m.b) + "],[" + render_poly(m.c) + "," +
           render_poly(m.d) + "]]";
}

// Parses [[a,b],[c,d]] with entries in the polynomial grammar.
inline Mat2 parse_mat(ModelId model, const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char ch) {
        skip();
        if (pos >= text.size() || text[pos] != ch)
            throw ParseError(pos, std::string("'") + ch + "'");
        ++pos;
    };
    auto entry = [&](char stop) {
        skip();
        std::size_t start = pos;
        int depth = 0;
        while (pos < text.size() && (depth > 0 || text[pos] != stop)) {
            if (text[pos] == '(') ++depth;
            if (text[pos] == ')') --depth;
            ++pos;
        }
        if (pos >= text.size()) throw ParseError(pos, std::string("'") + stop + "'");
        Poly p = parse_poly(text.substr(start, pos - start));
        ++pos;
        return p;
    };
    expect('[');
    expect('[');
    Poly a = entry(',');
    Poly b = entry(']');
    expect(',');
    expect('[');
    Poly c = entry(',');
    Poly d = entry(']');
    expect(']');
    skip();
    if (pos != text.size()) throw ParseError(pos, "end of input");
    return Mat2(model, a, b, c, d);
}

}  // namespace urcode
