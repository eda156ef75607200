#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "urcode/mat2.hpp"

namespace urcode {

// --- Ur-strings of model elements, coded as B A^{x_0} ... B A^{x_{k-1}} ---

// The ur-string domain D: the identity, or B times a monoid element.
inline bool urs_domain(const Mat2& m) {
    bool zeros = m.b().is_zero() && m.c().is_zero();
    bool ordered = (m.c() - m.a()).dominance_sign() >= 0 && (m.d() - m.b()).dominance_sign() >= 0;
    return zeros || ordered;
}

inline Mat2 urs_atom(ModelId model, const ModelElem& x) {
    return mat_mul(Mat2::atom_b(model), pow_a(model, x));
}

inline Mat2 urs_encode(ModelId model, const std::vector<ModelElem>& xs) {
    Mat2 acc = Mat2::identity(model);
    for (const ModelElem& x : xs) acc = mat_mul(acc, urs_atom(model, x));
    return acc;
}

// Pops the last component: alpha = beta * [n] with n = quo(b, a). Fails
// with no value when the model cannot divide b by a; that is exactly the
// submodel failure mode of the stack principle.
inline std::optional<std::pair<Mat2, ModelElem>> urs_pop(const Mat2& alpha) {
    if (alpha.is_identity()) throw EmptyString();
    if (!urs_domain(alpha)) throw DomainViolation("matrix is not an ur-string");
    ModelElem a(alpha.model(), alpha.a());
    ModelElem b(alpha.model(), alpha.b());
    auto div = try_euc_div(b, a);
    if (!div) return std::nullopt;
    const Poly& n = div->quotient.value();
    // beta = alpha * (B A^n)^-1 = alpha * [[1+n, -n],[-1, 1]].
    Poly one = Poly::constant(Rat(1));
    Mat2 beta(alpha.model(), alpha.a() * (one + n) - alpha.b(), alpha.b() - alpha.a() * n,
              alpha.c() * (one + n) - alpha.d(), alpha.d() - alpha.c() * n);
    if (!urs_domain(beta)) throw std::logic_error("urs_pop: popped matrix left the domain");
    return std::make_pair(beta, div->quotient);
}

inline std::optional<std::vector<ModelElem>> urs_decode(Mat2 alpha) {
    std::vector<ModelElem> out;
    while (!alpha.is_identity()) {
        auto popped = urs_pop(alpha);
        if (!popped) return std::nullopt;
        out.push_back(popped->second);
        alpha = popped->first;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// --- Reverse-mathematics fixture: Bezout versus Euclidean pairs ---

struct BezEucReport {
    bool bezout;         // a*d - b*c = 1
    bool ab_euclidean;   // b divisible by a with remainder, in the model
    bool cd_euclidean;   // d divisible by c with remainder, in the model
};

inline BezEucReport bez_euc_check(const ModelElem& a, const ModelElem& b, const ModelElem& c,
                                  const ModelElem& d) {
    BezEucReport r{};
    r.bezout = a.value() * d.value() == b.value() * c.value() + Poly::constant(Rat(1));
    r.ab_euclidean = is_euclidean_pair(a, b);
    r.cd_euclidean = is_euclidean_pair(c, d);
    return r;
}

// --- Run-length normal forms ---

struct Run {
    Letter letter;
    Poly exponent;  // > 0 in the dominance order
    bool operator==(const Run&) const = default;
};

struct RunNF {
    ModelId model;
    std::vector<Run> runs;  // letters alternate
    bool operator==(const RunNF&) const = default;
};

inline Mat2 eval_runs(const RunNF& nf) {
    Mat2 acc = Mat2::identity(nf.model);
    for (const Run& r : nf.runs) {
        ModelElem e(nf.model, r.exponent);
        acc = mat_mul(acc, r.letter == Letter::A ? pow_a(nf.model, e) : pow_b(nf.model, e));
    }
    return acc;
}

// Ordinal norm omega^m + n on the top row: m is the larger degree, n the
// reduced-triple norm of the leading coefficients when the degrees agree.
struct OrdNorm {
    long degree_part;  // >= -1
    Int finite_part;

    bool operator==(const OrdNorm&) const = default;
    bool operator<(const OrdNorm& o) const {
        return degree_part != o.degree_part ? degree_part < o.degree_part
                                            : finite_part < o.finite_part;
    }
};

// Writes (p, q) = (m/k, n/k) with gcd(m, n, k) = 1 and returns max(m, n).
inline Int nnorm(const Rat& p, const Rat& q) {
    if (sgn(p) < 0 || sgn(q) < 0 || (sgn(p) == 0 && sgn(q) == 0))
        throw PreconditionViolated("nnorm: arguments must be non-negative, not both zero");
    Int k = lcm(p.get_den(), q.get_den());
    Int m = p.get_num() * (k / p.get_den());
    Int n = q.get_num() * (k / q.get_den());
    Int g = gcd(gcd(m, n), k);
    m /= g;
    n /= g;
    return m > n ? m : n;
}

inline OrdNorm ord_norm(const Mat2& alpha) {
    const Poly& a = alpha.a();
    const Poly& b = alpha.b();
    if (a.is_zero() && b.is_zero()) throw PreconditionViolated("ord_norm: zero top row");
    long da = a.degree(), db = b.degree();
    long m = da > db ? da : db;
    if (da != db) return {m, 0};
    return {m, nnorm(a.leading(), b.leading())};
}

namespace detail {

inline void push_run(std::vector<Run>& rev, Letter l, const Poly& e) {
    if (e.dominance_sign() <= 0) {
        if (e.is_zero()) return;  // zero-exponent runs are dropped
        throw std::logic_error("normal_form: negative run exponent");
    }
    if (!rev.empty() && rev.back().letter == l)
        rev.back().exponent = rev.back().exponent + e;  // merge same-letter runs
    else
        rev.push_back({l, e});
}

}  // namespace detail

// The Euclidean-style descent producing the unique alternating product
// A^{P_0} B^{Q_0} ... representing alpha. Steps pop whole runs from the
// right; the ordinal norm of the working matrix strictly decreases until
// one of the terminal cases fires. Requires a Euclidean-capable model.
// When trace is given, it receives the ordinal norm of the working matrix
// at the start of each iteration.
inline RunNF normal_form(const Mat2& alpha0, std::vector<OrdNorm>* trace = nullptr) {
    if (alpha0.model() != ModelId::Nat && alpha0.model() != ModelId::M2)
        throw UnsupportedModel("normal_form needs nat or M2; analyse submodels via M2 cuts");

    const ModelId mod = alpha0.model();
    std::vector<Run> rev;  // rightmost run first
    Mat2 alpha = alpha0;
    for (;;) {
        Letter l = last_letter(alpha);
        if (l == Letter::Empty) break;
        if (trace) trace->push_back(ord_norm(alpha));
        ModelElem a(mod, alpha.a());
        ModelElem b(mod, alpha.b());
        if (l == Letter::A) {
            auto div = try_euc_div(b, a);  // total on nat/M2
            if (!div) throw std::logic_error("normal_form: division failed on Euclidean model");
            const Poly& q = div->quotient.value();
            const Poly& r = div->remainder.value();
            detail::push_run(rev, Letter::A, q);
            alpha = Mat2(mod, alpha.a(), r, alpha.c(), alpha.d() - q * alpha.c());
        } else {
            if (alpha.b().is_zero()) {
                detail::push_run(rev, Letter::B, alpha.c());
                break;
            }
            auto div = try_euc_div(a, b);
            if (!div) throw std::logic_error("normal_form: division failed on Euclidean model");
            const Poly& q = div->quotient.value();
            const Poly& r = div->remainder.value();
            Poly cprime = alpha.c() - q * alpha.d();
            if (cprime.dominance_sign() >= 0) {
                detail::push_run(rev, Letter::B, q);
                alpha = Mat2(mod, r, alpha.b(), cprime, alpha.d());
            } else {
                // r = 0 here; alpha = B^{d-1} A B^{q-1} exactly.
                if (!r.is_zero())
                    throw std::logic_error("normal_form: terminal case with non-zero remainder");
                detail::push_run(rev, Letter::B, q - Poly::constant(Rat(1)));
                detail::push_run(rev, Letter::A, Poly::constant(Rat(1)));
                detail::push_run(rev, Letter::B, alpha.d() - Poly::constant(Rat(1)));
                break;
            }
        }
    }
    RunNF nf{mod, std::vector<Run>(rev.rbegin(), rev.rend())};
    return nf;
}

// --- Profiles ---

struct ProfileRun {
    Letter letter;
    std::optional<Int> finite;  // nullopt: a varpi-shaped nonstandard run
    bool operator==(const ProfileRun&) const = default;
};

inline std::vector<ProfileRun> profile(const RunNF& nf) {
    std::vector<ProfileRun> out;
    for (const Run& r : nf.runs) {
        if (r.exponent.degree() == 0)
            out.push_back({r.letter, r.exponent.constant_term().get_num()});
        else
            out.push_back({r.letter, std::nullopt});
    }
    return out;
}

// --- Cuts: initial segments of a normal form, for submodel analysis ---

struct Cut {
    std::size_t run_index;
    Poly offset;  // 0 <= offset <= exponent at run_index
};

inline Mat2 prefix_at_cut(const RunNF& nf, const Cut& cut) {
    if (cut.run_index > nf.runs.size()) throw OutOfBounds();
    if (cut.run_index == nf.runs.size() && !cut.offset.is_zero()) throw OutOfBounds();
    if (cut.offset.dominance_sign() < 0) throw OutOfBounds();
    Mat2 acc = Mat2::identity(ModelId::M2);
    for (std::size_t j = 0; j < cut.run_index; ++j) {
        ModelElem e(ModelId::M2, nf.runs[j].exponent);
        acc = mat_mul(acc, nf.runs[j].letter == Letter::A ? pow_a(ModelId::M2, e)
                                                          : pow_b(ModelId::M2, e));
    }
    if (cut.run_index < nf.runs.size()) {
        const Run& r = nf.runs[cut.run_index];
        if ((r.exponent - cut.offset).dominance_sign() < 0) throw OutOfBounds();
        ModelElem e(ModelId::M2, cut.offset);
        acc = mat_mul(acc, r.letter == Letter::A ? pow_a(ModelId::M2, e) : pow_b(ModelId::M2, e));
    }
    return acc;
}

inline bool cut_in_model(const RunNF& nf, const Cut& cut, ModelId target) {
    Mat2 p = prefix_at_cut(nf, cut);
    return is_member(target, p.a()) && is_member(target, p.b()) && is_member(target, p.c()) &&
           is_member(target, p.d());
}

// --- Substitution X := p on M2 matrices; commutes with normal forms ---

inline Mat2 subst_x(const Mat2& alpha, const Poly& p) {
    if (p.degree() < 1) throw DegreeTooLow();
    return Mat2(alpha.model(), alpha.a().subst(p), alpha.b().subst(p), alpha.c().subst(p),
                alpha.d().subst(p));
}

inline RunNF subst_runs(const RunNF& nf, const Poly& p) {
    if (p.degree() < 1) throw DegreeTooLow();
    RunNF out{nf.model, {}};
    for (const Run& r : nf.runs) out.runs.push_back({r.letter, r.exponent.subst(p)});
    return out;
}

// --- Rendering ---

inline std::string render_run_exponent(const Poly& e) {
    if (e == Poly::constant(Rat(1))) return "";
    if (e.degree() == 0) return "^" + to_string(e.constant_term());
    return "^{" + render_poly(e) + "}";
}

inline std::string render_nf(const RunNF& nf) {
    std::string out;
    for (const Run& r : nf.runs) {
        if (!out.empty()) out += " ";
        out += (r.letter == Letter::A ? "A" : "B");
        out += render_run_exponent(r.exponent);
    }
    return out;
}

inline std::string render_profile(const std::vector<ProfileRun>& pr) {
    std::string out;
    for (const ProfileRun& r : pr) {
        if (!out.empty()) out += " ";
        out += (r.letter == Letter::A ? "A" : "B");
        if (!r.finite)
            out += "^ϖ";  // varpi
        else if (*r.finite != 1)
            out += "^" + r.finite->get_str();
    }
    return out;
}

}  // namespace urcode
