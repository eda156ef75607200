#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "urcode/dyadic.hpp"
#include "urcode/markov.hpp"
#include "urcode/tcstrings.hpp"

namespace urcode::axiomlab {

// --- Deterministic sampling ---

struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
    long rint(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1))); }
    bool chance(unsigned num, unsigned den) { return below(den) < num; }
};

inline uint64_t mix_seed(uint64_t seed, const std::string& tag) {
    uint64_t h = seed ^ 0xcbf29ce484222325ULL;
    for (char c : tag) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    return h;
}

struct SampleConfig {
    uint64_t seed = 0;
    int count = 128;
    unsigned long size_bound = 1 << 16;
    int search_budget = 4096;
};

// Log-uniform natural in [0, bound].
inline Int gen_nat(Rng& rng, const Int& bound) {
    if (sgn(bound) <= 0) return 0;
    if (rng.chance(1, 8)) return Int(rng.below(4));
    std::size_t maxbits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    std::size_t bits = 1 + rng.below(maxbits);
    Int v = 0;
    for (std::size_t i = 0; i < bits; i += 32) v = (v << 32) | Int(static_cast<unsigned long>(rng.next() & 0xffffffffULL));
    Int window = (Int(1) << bits);
    v %= window;
    return v % (bound + 1);
}

// Membership-by-construction element generators, matching the scale of the
// worked examples: degree <= 4, small coefficients.
inline Poly gen_poly_for(Rng& rng, ModelId m, unsigned long size_bound) {
    long height = static_cast<long>(std::min<unsigned long>(size_bound, 50));
    switch (m) {
        case ModelId::Nat:
            return Poly::constant(gen_nat(rng, Int(size_bound)));
        case ModelId::QNonneg: {
            Int num = gen_nat(rng, Int(height));
            Int den = Int(rng.rint(1, 6));
            return Poly::constant(make_rat(num, den));
        }
        case ModelId::M0: {
            long deg = rng.rint(0, 4);
            if (deg == 0) return Poly::constant(Int(rng.rint(0, height)));
            Poly p = Poly::monomial(Rat(rng.rint(1, height)), static_cast<unsigned long>(deg));
            for (long k = 0; k < deg; ++k)
                p = p + Poly::monomial(Rat(rng.rint(-height, height)), static_cast<unsigned long>(k));
            return p;
        }
        case ModelId::M1: {
            long deg = rng.rint(0, 4);
            if (deg == 0) return Poly::constant(Int(rng.rint(0, height)));
            Poly p = binomial_poly(static_cast<unsigned long>(deg)) * Rat(rng.rint(1, height));
            for (long k = 0; k < deg; ++k)
                p = p + binomial_poly(static_cast<unsigned long>(k)) * Rat(rng.rint(-height, height));
            return p;
        }
        case ModelId::M2: {
            long deg = rng.rint(0, 4);
            if (deg == 0) return Poly::constant(Int(rng.rint(0, height)));
            Poly p = Poly::monomial(make_rat(Int(rng.rint(1, height)), Int(rng.rint(1, 4))),
                                    static_cast<unsigned long>(deg));
            for (long k = 1; k < deg; ++k)
                p = p + Poly::monomial(make_rat(Int(rng.rint(-height, height)), Int(rng.rint(1, 4))),
                                       static_cast<unsigned long>(k));
            return p + Poly::constant(Rat(rng.rint(-height, height)));
        }
    }
    return Poly();
}

inline ModelElem gen_elem(Rng& rng, ModelId m, unsigned long size_bound) {
    Poly p = gen_poly_for(rng, m, size_bound);
    if (p.dominance_sign() < 0) p = -p;
    if (m == ModelId::M2 && !rat_is_integer(p.constant_term()))
        p = p - Poly::constant(p.constant_term()) + Poly::constant(Rat(rat_floor(p.constant_term())));
    return ModelElem(m, p);
}

inline ModelElem gen_positive_elem(Rng& rng, ModelId m, unsigned long size_bound) {
    ModelElem e = gen_elem(rng, m, size_bound);
    if (e.is_zero()) return ModelElem::from_int(m, 1 + Int(rng.below(4)));
    return e;
}

// Random alternating product of A- and B-runs; exponents are positive
// model elements of degree <= max_deg and coefficient height <= height.
inline Mat2 gen_run_matrix(Rng& rng, ModelId m, int max_runs, int max_deg, long height) {
    int runs = static_cast<int>(rng.below(static_cast<uint64_t>(max_runs + 1)));
    Mat2 acc = Mat2::identity(m);
    Letter l = rng.chance(1, 2) ? Letter::A : Letter::B;
    for (int i = 0; i < runs; ++i) {
        Poly e;
        long deg = rng.rint(0, max_deg);
        if (m == ModelId::Nat || deg == 0) {
            e = Poly::constant(Int(rng.rint(1, height)));
        } else if (m == ModelId::M2) {
            e = Poly::monomial(make_rat(Int(rng.rint(1, height)), Int(rng.rint(1, 4))),
                               static_cast<unsigned long>(deg));
            for (long k = 1; k < deg; ++k)
                e = e + Poly::monomial(make_rat(Int(rng.rint(-height, height)), Int(rng.rint(1, 4))),
                                       static_cast<unsigned long>(k));
            e = e + Poly::constant(Rat(rng.rint(-height, height)));
            if (e.dominance_sign() < 0) e = -e;
            e = e - Poly::constant(e.constant_term()) + Poly::constant(Rat(rat_floor(e.constant_term())));
            if (e.dominance_sign() <= 0) e = Poly::constant(Rat(1));
        } else {
            Poly p = gen_poly_for(rng, m, static_cast<unsigned long>(height));
            if (p.dominance_sign() < 0) p = -p;
            e = p.dominance_sign() > 0 ? p : Poly::constant(Rat(1));
        }
        ModelElem exp(m, e);
        acc = mat_mul(acc, l == Letter::A ? pow_a(m, exp) : pow_b(m, exp));
        l = (l == Letter::A) ? Letter::B : Letter::A;
    }
    return acc;
}

inline std::vector<ModelElem> gen_elem_list(Rng& rng, ModelId m, std::size_t max_len,
                                            unsigned long size_bound) {
    std::vector<ModelElem> xs;
    std::size_t n = rng.below(max_len + 1);
    for (std::size_t i = 0; i < n; ++i) xs.push_back(gen_elem(rng, m, size_bound));
    return xs;
}

// --- Axiom identifiers ---

enum class Family { PA, TC, TCL, TCU };

struct AxiomId {
    Family family;
    int index;
    bool minus = false;  // the pa17- variant

    bool operator==(const AxiomId&) const = default;
    bool operator<(const AxiomId& o) const {
        if (family != o.family) return family < o.family;
        if (index != o.index) return index < o.index;
        return minus < o.minus;
    }
};

inline std::string axiom_name(const AxiomId& a) {
    std::string base;
    switch (a.family) {
        case Family::PA: base = "pa"; break;
        case Family::TC: base = "tc"; break;
        case Family::TCL: base = "tcl"; break;
        case Family::TCU: base = "tcu"; break;
    }
    base += std::to_string(a.index);
    if (a.minus) base += "-";
    return base;
}

inline std::optional<AxiomId> parse_axiom(const std::string& s) {
    auto take = [&](const std::string& prefix, Family fam) -> std::optional<AxiomId> {
        if (s.rfind(prefix, 0) != 0) return std::nullopt;
        std::string rest = s.substr(prefix.size());
        bool minus = !rest.empty() && rest.back() == '-';
        if (minus) rest.pop_back();
        if (rest.empty()) return std::nullopt;
        for (char c : rest)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        return AxiomId{fam, std::stoi(rest), minus};
    };
    if (auto a = take("tcu", Family::TCU)) return a;
    if (auto a = take("tcl", Family::TCL)) return a;
    if (auto a = take("tc", Family::TC)) return a;
    if (auto a = take("pa", Family::PA)) return a;
    return std::nullopt;
}

inline bool axiom_in_range(const AxiomId& a) {
    switch (a.family) {
        case Family::PA: return a.index >= 1 && a.index <= 21 && (!a.minus || a.index == 17);
        case Family::TC: return (a.index >= 1 && a.index <= 8) || a.index == 12;
        case Family::TCL: return a.index >= 1 && a.index <= 5;
        case Family::TCU: return a.index >= 1 && a.index <= 8;
    }
    return false;
}

// --- Targets ---

enum class TargetKind { Model, StrFree, StrSrs, StrDyadic, StrMarkov, UrsDyadic, UrsMarkov };

struct Target {
    TargetKind kind;
    ModelId model = ModelId::Nat;  // for Model / StrMarkov / UrsMarkov
};

inline std::string target_name(const Target& t) {
    switch (t.kind) {
        case TargetKind::Model: return model_name(t.model);
        case TargetKind::StrFree: return "str-free";
        case TargetKind::StrSrs: return "str-srs";
        case TargetKind::StrDyadic: return "str-dyadic";
        case TargetKind::StrMarkov: return std::string("str-markov-") + model_name(t.model);
        case TargetKind::UrsDyadic: return "urs-dyadic";
        case TargetKind::UrsMarkov: return std::string("urs-markov-") + model_name(t.model);
    }
    return "?";
}

inline std::optional<Target> parse_target(const std::string& s) {
    if (auto m = parse_model(s)) return Target{TargetKind::Model, *m};
    if (s == "str-free") return Target{TargetKind::StrFree};
    if (s == "str-srs") return Target{TargetKind::StrSrs};
    if (s == "str-dyadic") return Target{TargetKind::StrDyadic};
    if (s == "urs-dyadic") return Target{TargetKind::UrsDyadic};
    auto strip = [&](const std::string& prefix) -> std::optional<ModelId> {
        if (s.rfind(prefix, 0) != 0) return std::nullopt;
        return parse_model(s.substr(prefix.size()));
    };
    if (auto m = strip("str-markov-")) return Target{TargetKind::StrMarkov, *m};
    if (auto m = strip("urs-markov-")) return Target{TargetKind::UrsMarkov, *m};
    return std::nullopt;
}

// --- Check reports ---

enum class Status { Holds, Refuted, Unknown };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Refuted: return "refuted";
        case Status::Unknown: return "unknown";
    }
    return "?";
}

struct CheckReport {
    std::string target;
    std::string axiom;
    int samples = 0;
    Status status = Status::Unknown;
    std::vector<std::string> witness;  // rendered tuple refuting the axiom
};

enum class Tri { True, False, Unknown };

}  // namespace urcode::axiomlab
