#pragma once

#include "urcode/axiomlab_run.hpp"

namespace urcode::axiomlab {

// ===== Named counterexamples from the worked examples =====

inline Poly poly_of(const std::string& s) { return parse_poly(s); }

// [[9, 3X+2],[3X+4, X^2+2X+1]]: a Markov string of M0 whose bottom pair is
// Bezout but not Euclidean; the stack principle fails on B times it.
inline Mat2 frak_a(ModelId m = ModelId::M0) {
    return Mat2(m, poly_of("9"), poly_of("3*X+2"), poly_of("3*X+4"), poly_of("X^2+2*X+1"));
}

// [[5X+7, X^2-2],[25, 5X-7]]: an a-string of M0 that is not a tally power.
inline Mat2 frak_b(ModelId m = ModelId::M0) {
    return Mat2(m, poly_of("5*X+7"), poly_of("X^2-2"), poly_of("25"), poly_of("5*X-7"));
}

// The Skolem matrix, a Markov string of M1 but not of M0.
inline Mat2 frak_s(ModelId m = ModelId::M1) {
    return Mat2(m, poly_of("X^2-6*X+10"), poly_of("1/3*X^4-2*X^3+11/3*X^2-2*X+3"), poly_of("3"), poly_of("X^2+1"));
}

// Editors failure over the non-negative rationals: alpha*beta = gamma*delta
// but the mediating matrix has entries -3/5 and 3/5 off the diagonal.
struct QnnQuad {
    Mat2 alpha, beta, gamma, delta;
};
inline QnnQuad qnn_editors_quad() {
    ModelId q = ModelId::QNonneg;
    return {Mat2(q, poly_of("7/5"), poly_of("1/5"), poly_of("3/5"), poly_of("4/5")), Mat2::atom_a(q), Mat2::atom_a(q),
            Mat2(q, poly_of("4/5"), poly_of("1/5"), poly_of("3/5"), poly_of("7/5"))};
}

inline RunNF expected_nf_a() {
    return RunNF{ModelId::M2,
                 {{Letter::B, poly_of("1/3*X")}, {Letter::A, poly_of("2")}, {Letter::B, poly_of("4")},
                  {Letter::A, poly_of("1/3*X")}}};
}
inline RunNF expected_nf_b() {
    return RunNF{ModelId::M2,
                 {{Letter::A, poly_of("1/5*X")}, {Letter::B, poly_of("3")}, {Letter::A, poly_of("1")},
                  {Letter::B, poly_of("1")}, {Letter::A, poly_of("2")}, {Letter::B, poly_of("1")},
                  {Letter::A, poly_of("1/5*X-1")}}};
}
inline RunNF expected_nf_s() {
    return RunNF{ModelId::M2,
                 {{Letter::A, poly_of("1/3*X^2-2*X+3")}, {Letter::B, poly_of("3")}, {Letter::A, poly_of("1/3*X^2")}}};
}

inline Mat2 to_model(const Mat2& m, ModelId target) {
    return Mat2(target, m.a(), m.b(), m.c(), m.d());
}

struct RegistryEntry {
    std::string id;
    std::string description;
    std::string target;  // matrix row this witnesses, empty if standalone
    std::string axiom;
    std::vector<std::string> witness;
    std::function<bool()> verify;  // re-verifies via the module operations
};

inline const std::vector<RegistryEntry>& known_counterexamples() {
    static const std::vector<RegistryEntry> entries = [] {
        std::vector<RegistryEntry> r;

        r.push_back({"frak-a", "M0 matrix with Bezout-not-Euclidean bottom pair", "M0", "pa17-",
                     {"9", "3*X+2", "3*X+4", "X^2+2*X+1"}, [] {
                         Mat2 a = frak_a();
                         auto rep = bez_euc_check(ModelElem(ModelId::M0, a.a()),
                                                  ModelElem(ModelId::M0, a.b()),
                                                  ModelElem(ModelId::M0, a.c()),
                                                  ModelElem(ModelId::M0, a.d()));
                         bool nf_ok = normal_form(to_model(a, ModelId::M2)) == expected_nf_a();
                         return rep.bezout && !rep.ab_euclidean && nf_ok;
                     }});

        r.push_back({"frak-a-stack", "B*frak_a is a non-empty M0 ur-string with no pop",
                     "urs-markov-M0", "tcu7",
                     {render_mat(mat_mul(Mat2::atom_b(ModelId::M0), frak_a()))}, [] {
                         Mat2 ba = mat_mul(Mat2::atom_b(ModelId::M0), frak_a());
                         if (!urs_domain(ba) || ba.is_identity()) return false;
                         return !urs_pop(ba).has_value();
                     }});

        r.push_back({"frak-b", "M0 a-string that is no tally power; B*frak_b does not pop", "",
                     "", {render_mat(frak_b())}, [] {
                         Mat2 b = frak_b();
                         bool nf_ok = normal_form(to_model(b, ModelId::M2)) == expected_nf_b();
                         Mat2 bb = mat_mul(Mat2::atom_b(ModelId::M0), b);
                         return nf_ok && urs_domain(bb) && !urs_pop(bb).has_value();
                     }});

        r.push_back({"frak-s", "Skolem matrix: in M1, first row Bezout-not-Euclidean", "M1",
                     "pa17-",
                     {"X^2-6*X+10", "1/3*X^4-2*X^3+11/3*X^2-2*X+3", "3", "X^2+1"}, [] {
                         Mat2 s = frak_s();
                         auto rep = bez_euc_check(ModelElem(ModelId::M1, s.a()),
                                                  ModelElem(ModelId::M1, s.b()),
                                                  ModelElem(ModelId::M1, s.c()),
                                                  ModelElem(ModelId::M1, s.d()));
                         bool m0 = is_member(ModelId::M0, s.b());
                         bool nf_ok = normal_form(to_model(s, ModelId::M2)) == expected_nf_s();
                         return rep.bezout && !rep.ab_euclidean && !m0 && nf_ok;
                     }});

        r.push_back({"frak-s-stack", "B*frak_s is a non-empty M1 ur-string with no pop",
                     "urs-markov-M1", "tcu7",
                     {render_mat(mat_mul(Mat2::atom_b(ModelId::M1), frak_s()))}, [] {
                         Mat2 bs = mat_mul(Mat2::atom_b(ModelId::M1), frak_s());
                         if (!urs_domain(bs) || bs.is_identity()) return false;
                         return !urs_pop(bs).has_value();
                     }});

        r.push_back({"qnn-editors", "editors failure on Q>=0; mediating entry -3/5", "str-markov-Qnn",
                     "tc5",
                     [] {
                         QnnQuad q = qnn_editors_quad();
                         return std::vector<std::string>{render_mat(q.alpha), render_mat(q.beta),
                                                         render_mat(q.gamma), render_mat(q.delta)};
                     }(),
                     [] {
                         QnnQuad q = qnn_editors_quad();
                         if (mat_mul(q.alpha, q.beta) != mat_mul(q.gamma, q.delta)) return false;
                         EditorsOutcome out = editors_split(q.alpha, q.beta, q.gamma, q.delta);
                         return !out.found && out.mu.b == poly_of("-3/5") && out.mu.c == poly_of("3/5");
                     }});

        r.push_back({"qnn-weak-editors", "the same quadruple refutes the weak principle",
                     "str-markov-Qnn", "tc4",
                     [] {
                         QnnQuad q = qnn_editors_quad();
                         return std::vector<std::string>{render_mat(q.alpha), render_mat(q.beta),
                                                         render_mat(q.gamma), render_mat(q.delta)};
                     }(),
                     [] {
                         QnnQuad q = qnn_editors_quad();
                         return !editors_split(q.alpha, q.beta, q.gamma, q.delta).found;
                     }});

        r.push_back({"qnn-discreteness", "0 < 1/2 < 1 refutes discreteness", "Qnn", "pa11",
                     {"1/2", "0"}, [] {
                         ModelElem half(ModelId::QNonneg, poly_of("1/2"));
                         ModelElem zero = ModelElem::from_int(ModelId::QNonneg, 0);
                         ModelElem one = ModelElem::from_int(ModelId::QNonneg, 1);
                         return leq(zero, half) && zero != half && !leq(one, half);
                     }});

        r.push_back({"x-tarski-not-smullyan", "X is a Tarski power of 2 in M0 but not Smullyan",
                     "", "", {"X", "X"}, [] {
                         ModelElem x(ModelId::M0, poly_of("X"));
                         return pow2_refute_smullyan(x, x);
                     }});

        r.push_back({"srs-bicancel", "a<>b<>c = b refutes bi-cancellation in the SRS model",
                     "str-srs", "tc12", {"\"b\"", "\"a\"", "\"c\""}, [] {
                         auto [x, u, v] = srs_bicancel_counterexample();
                         return srs_concat(srs_concat(u, x), v) == x && !u.empty() && !v.empty();
                     }});

        return r;
    }();
    return entries;
}

// ===== check_axiom =====

inline CheckReport check_axiom(const Target& target, const AxiomId& axiom,
                               const SampleConfig& cfg) {
    if (!axiom_in_range(axiom)) throw NotApplicable("axiom index out of range");
    const std::string tname = target_name(target);
    const std::string aname = axiom_name(axiom);

    CheckReport report;
    report.target = tname;
    report.axiom = aname;
    report.samples = cfg.count;

    // Known counterexamples are decisive and take precedence over sampling.
    for (const RegistryEntry& e : known_counterexamples()) {
        if (e.target == tname && e.axiom == aname) {
            if (!e.verify()) throw std::logic_error("registry witness failed re-verification");
            report.status = Status::Refuted;
            report.witness = e.witness;
            return report;
        }
    }

    Rng rng(mix_seed(cfg.seed, tname + "/" + aname));
    detail::Verdict v;
    switch (axiom.family) {
        case Family::PA:
            if (target.kind != TargetKind::Model)
                throw NotApplicable("pa axioms apply to model backends");
            v = check_pa(target.model, axiom.index, axiom.minus, rng, cfg);
            break;
        case Family::TC:
        case Family::TCL: {
            auto run = [&](const auto& layer) {
                return axiom.family == Family::TC ? check_tc(layer, axiom.index, rng, cfg)
                                                  : check_tcl(layer, axiom.index, rng, cfg);
            };
            if (target.kind == TargetKind::StrFree)
                v = run(FreeLayer{});
            else if (target.kind == TargetKind::StrSrs)
                v = run(SrsLayer{});
            else if (target.kind == TargetKind::StrDyadic)
                v = run(DyadicLayer{});
            else if (target.kind == TargetKind::StrMarkov)
                v = run(MarkovStrLayer{target.model});
            else
                throw NotApplicable("tc axioms apply to string layers");
            break;
        }
        case Family::TCU:
            if (target.kind == TargetKind::UrsDyadic)
                v = check_tcu(DyadicUrsLayer{}, axiom.index, rng, cfg);
            else if (target.kind == TargetKind::UrsMarkov)
                v = check_tcu(MarkovUrsLayer{target.model}, axiom.index, rng, cfg);
            else
                throw NotApplicable("tcu axioms apply to ur-string codecs");
            break;
    }

    report.status = v.status;
    if (v.status == Status::Holds && v.unknowns > 0) report.status = Status::Unknown;
    report.witness = v.witness;
    return report;
}

// ===== The expected-status matrix and suite runner =====

struct SuiteRow {
    std::string target;
    std::string axiom;
    Status expected;
    CheckReport report;
    bool ok = false;
};

struct SuiteSummary {
    std::vector<SuiteRow> rows;
    int mismatches = 0;
    int unknowns = 0;
    bool ok() const { return mismatches == 0; }
};

inline std::vector<std::pair<std::string, std::pair<std::string, Status>>> expected_matrix() {
    std::vector<std::pair<std::string, std::pair<std::string, Status>>> rows;
    auto add = [&](const std::string& t, const std::string& a, Status s) {
        rows.push_back({t, {a, s}});
    };
    for (int i = 1; i <= 21; ++i) add("nat", "pa" + std::to_string(i), Status::Holds);
    for (const char* m : {"M0", "M1"}) {
        for (int i = 1; i <= 15; ++i) add(m, "pa" + std::to_string(i), Status::Holds);
        add(m, "pa17-", Status::Refuted);
    }
    for (int i = 1; i <= 17; ++i) add("M2", "pa" + std::to_string(i), Status::Holds);
    add("M2", "pa17-", Status::Holds);
    add("Qnn", "pa11", Status::Refuted);
    for (const char* t : {"str-free", "str-dyadic", "str-markov-nat", "str-markov-M0",
                          "str-markov-M2"}) {
        for (int i = 1; i <= 8; ++i) add(t, "tc" + std::to_string(i), Status::Holds);
        add(t, "tc12", Status::Holds);
    }
    for (int i = 1; i <= 5; ++i) add("str-dyadic", "tcl" + std::to_string(i), Status::Holds);
    add("str-markov-Qnn", "tc4", Status::Refuted);
    add("str-markov-Qnn", "tc5", Status::Refuted);
    for (int i = 1; i <= 7; ++i) add("str-srs", "tc" + std::to_string(i), Status::Holds);
    add("str-srs", "tc12", Status::Refuted);
    for (const char* t : {"urs-dyadic", "urs-markov-nat", "urs-markov-M2"})
        for (int i = 1; i <= 8; ++i) add(t, "tcu" + std::to_string(i), Status::Holds);
    for (const char* t : {"urs-markov-M0", "urs-markov-M1"})
        for (int i = 1; i <= 8; ++i)
            add(t, "tcu" + std::to_string(i), i == 7 ? Status::Refuted : Status::Holds);
    return rows;
}

inline SuiteSummary run_suite(const SampleConfig& cfg) {
    SuiteSummary summary;
    for (const auto& [tname, ax] : expected_matrix()) {
        SuiteRow row;
        row.target = tname;
        row.axiom = ax.first;
        row.expected = ax.second;
        row.report = check_axiom(*parse_target(tname), *parse_axiom(ax.first), cfg);
        row.ok = row.report.status == row.expected;
        if (!row.ok) ++summary.mismatches;
        if (row.report.status == Status::Unknown) ++summary.unknowns;
        summary.rows.push_back(std::move(row));
    }
    return summary;
}

}  // namespace urcode::axiomlab
