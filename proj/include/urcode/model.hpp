#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "urcode/poly.hpp"
#include "urcode/poly_text.hpp"

namespace urcode {

// The five backends: the standard naturals, the non-negative parts of
// Z[X], Int(Z) and Q[X]*X + Z under the dominance order, and the
// non-negative rationals (the non-discrete counterexample host).
enum class ModelId { Nat, M0, M1, M2, QNonneg };

inline bool is_discrete(ModelId m) { return m != ModelId::QNonneg; }

inline const char* model_name(ModelId m) {
    switch (m) {
        case ModelId::Nat: return "nat";
        case ModelId::M0: return "M0";
        case ModelId::M1: return "M1";
        case ModelId::M2: return "M2";
        case ModelId::QNonneg: return "Qnn";
    }
    return "?";
}

inline std::optional<ModelId> parse_model(const std::string& s) {
    if (s == "nat" || s == "NAT" || s == "N") return ModelId::Nat;
    if (s == "M0" || s == "m0") return ModelId::M0;
    if (s == "M1" || s == "m1") return ModelId::M1;
    if (s == "M2" || s == "m2") return ModelId::M2;
    if (s == "Qnn" || s == "qnn" || s == "Q") return ModelId::QNonneg;
    return std::nullopt;
}

// Coordinates of p in the binomial basis C(X,k), i.e. the forward
// differences at 0, when they are all integers. Empty list for p = 0.
inline std::optional<std::vector<Int>> binomial_coords(const Poly& p) {
    std::vector<Int> out;
    for (const Rat& d : forward_differences(p)) {
        if (!rat_is_integer(d)) return std::nullopt;
        out.push_back(d.get_num());
    }
    return out;
}

inline bool is_member(ModelId m, const Poly& v) {
    switch (m) {
        case ModelId::Nat:
            return v.degree() <= 0 && rat_is_integer(v.constant_term()) &&
                   sgn(v.constant_term()) >= 0;
        case ModelId::M0:
            return v.has_integer_coeffs() && v.dominance_sign() >= 0;
        case ModelId::M1:
            return binomial_coords(v).has_value() && v.dominance_sign() >= 0;
        case ModelId::M2:
            return rat_is_integer(v.constant_term()) && v.dominance_sign() >= 0;
        case ModelId::QNonneg:
            return v.degree() <= 0 && sgn(v.constant_term()) >= 0;
    }
    return false;
}

// A value tagged with its model. Construction validates membership.
class ModelElem {
   public:
    ModelElem(ModelId m, Poly v) : model_(m), value_(std::move(v)) {
        if (!is_member(model_, value_))
            throw NotMember(render_poly(value_) + " is not an element of " + model_name(model_));
    }

    static ModelElem from_int(ModelId m, const Int& n) { return ModelElem(m, Poly::constant(n)); }

    ModelId model() const { return model_; }
    const Poly& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    bool operator==(const ModelElem& o) const {
        return model_ == o.model_ && value_ == o.value_;
    }
    bool operator!=(const ModelElem& o) const { return !(*this == o); }

   private:
    ModelId model_;
    Poly value_;
};

inline void require_same_model(const ModelElem& a, const ModelElem& b) {
    if (a.model() != b.model()) throw ModelMismatch();
}

// Dominance order: a <= b iff b - a is zero or has positive leading
// coefficient. On degree-0 values this is the numeric order.
inline bool leq(const ModelElem& a, const ModelElem& b) {
    require_same_model(a, b);
    return (b.value() - a.value()).dominance_sign() >= 0;
}

inline bool lt(const ModelElem& a, const ModelElem& b) {
    require_same_model(a, b);
    return (b.value() - a.value()).dominance_sign() > 0;
}

inline ModelElem add(const ModelElem& a, const ModelElem& b) {
    require_same_model(a, b);
    return ModelElem(a.model(), a.value() + b.value());
}

inline ModelElem mul(const ModelElem& a, const ModelElem& b) {
    require_same_model(a, b);
    return ModelElem(a.model(), a.value() * b.value());
}

// The unique z with b + z = a, when b <= a.
inline std::optional<ModelElem> try_sub(const ModelElem& a, const ModelElem& b) {
    require_same_model(a, b);
    Poly d = a.value() - b.value();
    if (d.dominance_sign() < 0) return std::nullopt;
    return ModelElem(a.model(), d);
}

struct EucResult {
    ModelElem quotient;
    ModelElem remainder;
};

// Euclidean division a = q*b + r with 0 <= r < b. Total on Nat and M2;
// on M0/M1 succeeds exactly when the M2 quotient and remainder stay in the
// submodel; unsupported on the non-discrete backend.
//
// The M2 construction: split a = A'*X + a0, divide A' by b in Q[X] giving
// P', R', then shift P := P'*X + n by the unique integer n that puts
// R := R'*X + a0 - n*b into [0, b). The shift is located by a monotone
// scan seeded at the floor of the leading-coefficient ratio.
inline std::optional<EucResult> try_euc_div(const ModelElem& a, const ModelElem& b) {
    require_same_model(a, b);
    if (b.is_zero()) throw DivisionByZero();
    if (a.model() == ModelId::QNonneg) return std::nullopt;  // by decision

    const Poly& pb = b.value();
    Poly aprime = a.value().shift_down();
    Poly a0 = Poly::constant(a.value().constant_term());
    auto [pprime, rprime] = aprime.divmod_qx(pb);
    Poly c = rprime.shift_up() + a0;

    // n := max { n in Z : c - n*b >= 0 }; seed at the leading-coeff ratio.
    Int n = 0;
    if (c.degree() == pb.degree() && !c.is_zero()) {
        Rat ratio = c.leading() / pb.leading();
        n = rat_floor(ratio);
    } else if (c.degree() > pb.degree()) {
        // deg c <= deg b always holds here: deg R' < deg b and a0 is constant.
        throw std::logic_error("euclidean division: remainder candidate too large");
    } else if (c.dominance_sign() < 0) {
        n = -1;
    }
    while ((c - Poly::constant(Rat(n)) * pb).dominance_sign() < 0) --n;
    while ((c - Poly::constant(Rat(n + 1)) * pb).dominance_sign() >= 0) ++n;

    Poly q = pprime.shift_up() + Poly::constant(Rat(n));
    Poly r = c - Poly::constant(Rat(n)) * pb;

    if (!is_member(a.model(), q) || !is_member(a.model(), r)) return std::nullopt;
    EucResult res{ModelElem(a.model(), q), ModelElem(a.model(), r)};
    // a = q*b + r and 0 <= r < b, by construction.
    if (res.quotient.value() * pb + res.remainder.value() != a.value())
        throw std::logic_error("euclidean division: identity check failed");
    if ((pb - r).dominance_sign() <= 0)
        throw std::logic_error("euclidean division: remainder bound failed");
    return res;
}

// Whether b = q*a + r is solvable in the model: (a, b) is a Euclidean pair.
inline bool is_euclidean_pair(const ModelElem& a, const ModelElem& b) {
    if (a.is_zero()) return false;
    return try_euc_div(b, a).has_value();
}

// u := gcd(x, y) and v := x/u, given x | y*z; then u | y and v | z.
inline std::pair<Int, Int> primal_split(const Int& x, const Int& y, const Int& z) {
    if (sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0)
        throw PreconditionViolated("primal_split: all arguments zero");
    if (sgn(x) == 0) {
        if (sgn(y * z) != 0) throw PreconditionViolated("primal_split: x does not divide y*z");
        return sgn(y) != 0 ? std::pair<Int, Int>{y, 0} : std::pair<Int, Int>{0, z};
    }
    if ((y * z) % x != 0) throw PreconditionViolated("primal_split: x does not divide y*z");
    Int u = gcd(x, y);
    Int v = x / u;
    return {u, v};
}

// Smullyan: every divisor of x is 1 or even.
inline bool pow2_smullyan(const Int& x) { return is_power_of_two(x); }

// Tarski: x has no factorization (2y+3)*z.
inline bool pow2_tarski(const Int& x) { return is_power_of_two(x); }

// Divisibility inside a model: exists z in the model with y*z = x.
inline bool divides_in_model(const ModelElem& y, const ModelElem& x) {
    require_same_model(y, x);
    if (y.is_zero()) return x.is_zero();
    auto [q, r] = x.value().divmod_qx(y.value());
    return r.is_zero() && is_member(x.model(), q);
}

// Verifies a Smullyan refutation witness: y | x, y != 1, 2 does not divide y.
inline bool pow2_refute_smullyan(const ModelElem& x, const ModelElem& y) {
    ModelElem two = ModelElem::from_int(x.model(), 2);
    ModelElem one = ModelElem::from_int(x.model(), 1);
    return divides_in_model(y, x) && y != one && !divides_in_model(two, y);
}

// Verifies a Tarski refutation witness: x = (2y+3)*z.
inline bool pow2_refute_tarski(const ModelElem& x, const ModelElem& y, const ModelElem& z) {
    Poly factor = Poly::constant(Rat(2)) * y.value() + Poly::constant(Rat(3));
    return factor * z.value() == x.value();
}

inline std::string render_elem(const ModelElem& e) { return render_poly(e.value()); }

// Structured rendering for the CLI --json mode.
inline std::string to_json_fields(const ModelElem& e) {
    return std::string("\"model\": \"") + model_name(e.model()) + "\", \"poly\": \"" +
           render_poly(e.value()) + "\"";
}

}  // namespace urcode
