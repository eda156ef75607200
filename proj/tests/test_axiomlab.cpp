#include <catch2/catch_amalgamated.hpp>

#include "urcode/axiomlab_suite.hpp"

using namespace urcode;
namespace lab = urcode::axiomlab;

TEST_CASE("axiom and target identifiers") {
    CHECK(lab::axiom_name({lab::Family::PA, 17, true}) == "pa17-");
    CHECK(lab::parse_axiom("pa17-") == lab::AxiomId{lab::Family::PA, 17, true});
    CHECK(lab::parse_axiom("tcu7") == lab::AxiomId{lab::Family::TCU, 7, false});
    CHECK(lab::parse_axiom("tcl3") == lab::AxiomId{lab::Family::TCL, 3, false});
    CHECK_FALSE(lab::parse_axiom("zz9").has_value());
    CHECK(lab::target_name(*lab::parse_target("urs-markov-M0")) == "urs-markov-M0");
    CHECK_FALSE(lab::parse_target("urs-markov-xx").has_value());
}

TEST_CASE("determinism of reports") {
    lab::SampleConfig cfg;
    cfg.seed = 42;
    cfg.count = 64;
    for (const char* t : {"nat", "M2", "str-dyadic", "urs-markov-nat"}) {
        for (const char* a : {"pa8", "pa17", "tc5", "tcu6"}) {
            auto target = lab::parse_target(t);
            auto axiom = lab::parse_axiom(a);
            if ((axiom->family == lab::Family::PA) != (target->kind == lab::TargetKind::Model))
                continue;
            if (axiom->family != lab::Family::PA &&
                target->kind == lab::TargetKind::Model)
                continue;
            try {
                auto r1 = lab::check_axiom(*target, *axiom, cfg);
                auto r2 = lab::check_axiom(*target, *axiom, cfg);
                CHECK(r1.status == r2.status);
                CHECK(r1.witness == r2.witness);
            } catch (const NotApplicable&) {
            }
        }
    }
}

TEST_CASE("registry re-verifies") {
    for (const auto& entry : lab::known_counterexamples()) {
        CAPTURE(entry.id);
        CHECK(entry.verify());
    }
    // expected names present
    std::set<std::string> ids;
    for (const auto& e : lab::known_counterexamples()) ids.insert(e.id);
    for (const char* want : {"frak-a", "frak-b", "frak-s", "qnn-editors", "qnn-discreteness",
                             "x-tarski-not-smullyan", "srs-bicancel"})
        CHECK(ids.count(want) == 1);
}

TEST_CASE("spot checks of the expected matrix") {
    lab::SampleConfig cfg;
    cfg.count = 64;

    auto check = [&](const char* t, const char* a) {
        return lab::check_axiom(*lab::parse_target(t), *lab::parse_axiom(a), cfg);
    };

    CHECK(check("nat", "pa17").status == lab::Status::Holds);
    CHECK(check("M2", "pa17").status == lab::Status::Holds);

    auto m0 = check("M0", "pa17-");
    CHECK(m0.status == lab::Status::Refuted);
    CHECK(m0.witness ==
          std::vector<std::string>{"9", "3*X+2", "3*X+4", "X^2+2*X+1"});

    auto tcu7 = check("urs-markov-M0", "tcu7");
    CHECK(tcu7.status == lab::Status::Refuted);

    CHECK(check("Qnn", "pa11").status == lab::Status::Refuted);
    CHECK(check("str-srs", "tc12").status == lab::Status::Refuted);
    CHECK(check("str-markov-Qnn", "tc5").status == lab::Status::Refuted);
    CHECK(check("urs-dyadic", "tcu7").status == lab::Status::Holds);
    CHECK(check("str-dyadic", "tcl3").status == lab::Status::Holds);

    CHECK_THROWS_AS(check("nat", "tc5"), NotApplicable);
    CHECK_THROWS_AS(check("Qnn", "pa17"), NotApplicable);
    CHECK_THROWS_AS(check("Qnn", "pa19"), NotApplicable);
    CHECK(check("Qnn", "pa8").status == lab::Status::Holds);
    // the non-discrete backend also lacks predecessors
    CHECK(check("Qnn", "pa14").status == lab::Status::Refuted);
}

TEST_CASE("suite matrix at reduced sample counts") {
    lab::SampleConfig cfg;
    cfg.seed = 1;
    cfg.count = 24;
    lab::SuiteSummary s = lab::run_suite(cfg);
    for (const auto& row : s.rows) {
        CAPTURE(row.target, row.axiom);
        CHECK(row.ok);
    }
    CHECK(s.unknowns == 0);
}

TEST_CASE("refutation witnesses re-verify directly") {
    lab::SampleConfig cfg;
    cfg.count = 32;
    auto rep = lab::check_axiom(*lab::parse_target("M0"), *lab::parse_axiom("pa17-"), cfg);
    REQUIRE(rep.witness.size() == 4);
    ModelElem a(ModelId::M0, parse_poly(rep.witness[0]));
    ModelElem b(ModelId::M0, parse_poly(rep.witness[1]));
    ModelElem c(ModelId::M0, parse_poly(rep.witness[2]));
    ModelElem d(ModelId::M0, parse_poly(rep.witness[3]));
    auto bez = bez_euc_check(a, b, c, d);
    CHECK(bez.bezout);
    CHECK_FALSE(bez.ab_euclidean);
}
