#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "urcode/axiomlab_suite.hpp"
#include "urcode/beta.hpp"
#include "urcode/dyadic.hpp"
#include "urcode/markov.hpp"
#include "urcode/tcstrings.hpp"

namespace urcode::cli {

using nlohmann::json;

// Exit codes: 0 success, 2 parse/usage error, 3 domain error.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 2;
inline constexpr int kDomainError = 3;

namespace detail {

inline ModelId model_from_flag(const std::string& flag) {
    std::string value = flag;
    if (value.empty()) {
        if (const char* env = std::getenv("URCODE_MODEL")) value = env;
        if (value.empty()) value = "nat";
    }
    auto m = parse_model(value);
    if (!m) throw ParseError(0, "model name (nat, M0, M1, M2, Qnn)");
    return *m;
}

inline std::vector<std::string> split_parts(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == '|') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    if (out.size() == 1 && out[0].empty()) out.clear();
    return out;
}

inline std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

struct Printer {
    bool as_json;
    std::ostream& out;

    void line(const std::string& text, const json& structured) const {
        if (as_json)
            out << structured.dump() << "\n";
        else
            out << text << "\n";
    }
};

inline RunNF nf_in_m2_or_nat(ModelId model, const std::string& matrix_text) {
    if (model == ModelId::Nat || model == ModelId::M2)
        return normal_form(parse_mat(model, matrix_text));
    // Submodels are analysed through their M2 normal forms.
    Mat2 lifted = parse_mat(ModelId::M2, matrix_text);
    parse_mat(model, matrix_text);  // still validate membership in the declared model
    return normal_form(lifted);
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact string and ur-string codings over weak-arithmetic backends"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit structured records");

    std::string model_flag;

    // --- beta ---
    auto* beta = app.add_subcommand("beta", "Godel beta-function sequence coding");
    beta->require_subcommand(1);
    std::vector<std::string> beta_args;
    auto* beta_encode_cmd = beta->add_subcommand("encode", "encode a list of naturals");
    beta_encode_cmd->add_option("values", beta_args, "elements");
    std::string beta_w, beta_i, beta_s, beta_x;
    auto* beta_get_cmd = beta->add_subcommand("get", "beta(w, i)");
    beta_get_cmd->add_option("w", beta_w, "pair code <u,v>")->required();
    beta_get_cmd->add_option("i", beta_i, "index")->required();
    auto* beta_decode_cmd = beta->add_subcommand("decode", "decode a sequence code");
    beta_decode_cmd->add_option("s", beta_s, "sequence code")->required();
    auto* beta_append_cmd = beta->add_subcommand("append", "append an element");
    beta_append_cmd->add_option("s", beta_s, "sequence code")->required();
    beta_append_cmd->add_option("x", beta_x, "element")->required();

    // --- dyadic ---
    auto* dy = app.add_subcommand("dyadic", "Smullyan length-first coding");
    dy->require_subcommand(1);
    std::string dy_word, dy_n, dy_m;
    auto* dy_enc = dy->add_subcommand("encode", "word -> code");
    dy_enc->add_option("word", dy_word, "word over {a,b}; empty string for the empty word");
    auto* dy_dec = dy->add_subcommand("decode", "code -> word");
    dy_dec->add_option("n", dy_n, "code")->required();
    auto* dy_cat = dy->add_subcommand("concat", "m * n");
    dy_cat->add_option("m", dy_m, "left code")->required();
    dy_cat->add_option("n", dy_n, "right code")->required();

    // --- urs sm ---
    auto* urs = app.add_subcommand("urs", "ur-string codecs");
    urs->require_subcommand(1);
    auto* urs_sm = urs->add_subcommand("sm", "Smullyan mask/payload ur-strings");
    urs_sm->require_subcommand(1);
    std::vector<std::string> urs_vals;
    std::string urs_mask, urs_payload;
    auto* urs_enc = urs_sm->add_subcommand("encode", "naturals -> (mask, payload)");
    urs_enc->add_option("values", urs_vals, "elements");
    auto* urs_dec = urs_sm->add_subcommand("decode", "(mask, payload) -> naturals");
    urs_dec->add_option("mask", urs_mask, "mask code")->required();
    urs_dec->add_option("payload", urs_payload, "payload code")->required();

    // --- markov ---
    auto* mk = app.add_subcommand("markov", "SL2 string and ur-string coding");
    mk->require_subcommand(1);
    mk->fallthrough();  // --model may follow the verb
    mk->add_option("--model", model_flag, "backend: nat, M0, M1, M2, Qnn");
    std::string mk_word, mk_matrix, mk_offset, mk_target;
    std::size_t mk_run = 0;
    std::vector<std::string> mk_elems;
    auto* mk_enc = mk->add_subcommand("encode", "word -> matrix");
    mk_enc->add_option("word", mk_word, "word over {a,b}");
    auto* mk_dec = mk->add_subcommand("decode", "matrix -> word");
    mk_dec->add_option("matrix", mk_matrix, "[[a,b],[c,d]]")->required();
    auto* mk_nf = mk->add_subcommand("nf", "run-length normal form");
    mk_nf->add_option("matrix", mk_matrix, "[[a,b],[c,d]]")->required();
    auto* mk_prof = mk->add_subcommand("profile", "order-type profile of the normal form");
    mk_prof->add_option("matrix", mk_matrix, "[[a,b],[c,d]]")->required();
    auto* mk_cut = mk->add_subcommand("cut", "prefix of a normal form, with membership test");
    mk_cut->add_option("matrix", mk_matrix, "[[a,b],[c,d]]")->required();
    mk_cut->add_option("--run", mk_run, "run index")->required();
    mk_cut->add_option("--offset", mk_offset, "offset into the run (polynomial)")->required();
    mk_cut->add_option("--target", mk_target, "model to test the prefix against");
    auto* mk_uenc = mk->add_subcommand("urs-encode", "elements -> ur-string matrix");
    mk_uenc->add_option("values", mk_elems, "elements in the polynomial grammar");
    auto* mk_udec = mk->add_subcommand("urs-decode", "ur-string matrix -> elements");
    mk_udec->add_option("matrix", mk_matrix, "[[a,b],[c,d]]")->required();

    // --- tc / srs ---
    auto* tc = app.add_subcommand("tc", "concatenation theory on concrete words");
    tc->require_subcommand(1);
    std::string tc_word, tc_parts1, tc_parts2;
    auto* tc_refine = tc->add_subcommand("refine", "common refinement of two partitions");
    tc_refine->add_option("word", tc_word, "base word")->required();
    tc_refine->add_option("parts1", tc_parts1, "pipe-separated parts, e.g. ab|c")->required();
    tc_refine->add_option("parts2", tc_parts2, "pipe-separated parts")->required();

    auto* srs = app.add_subcommand("srs", "the abc -> b rewriting model");
    srs->require_subcommand(1);
    std::string srs_w1, srs_w2;
    auto* srs_nf_cmd = srs->add_subcommand("nf", "normal form");
    srs_nf_cmd->add_option("word", srs_w1, "word over {a,b,c}");
    auto* srs_cat = srs->add_subcommand("concat", "normalised concatenation");
    srs_cat->add_option("w1", srs_w1, "left word");
    srs_cat->add_option("w2", srs_w2, "right word");

    // --- axioms ---
    auto* ax = app.add_subcommand("axioms", "seeded axiom checks");
    ax->require_subcommand(1);
    std::string ax_target, ax_axiom;
    axiomlab::SampleConfig cfg;
    auto* ax_check = ax->add_subcommand("check", "check one axiom against one target");
    ax_check->add_option("--target", ax_target, "e.g. nat, M0, str-dyadic, urs-markov-M0")
        ->required();
    ax_check->add_option("--axiom", ax_axiom, "e.g. pa17, pa17-, tc5, tcl3, tcu7")->required();
    ax_check->add_option("--seed", cfg.seed, "rng seed");
    ax_check->add_option("--count", cfg.count, "samples per axiom");
    ax_check->add_option("--size-bound", cfg.size_bound, "generator magnitude bound");
    ax_check->add_option("--budget", cfg.search_budget, "bounded-search budget");
    auto* ax_suite = ax->add_subcommand("suite", "run the expected-status matrix");
    ax_suite->add_option("--seed", cfg.seed, "rng seed");
    ax_suite->add_option("--count", cfg.count, "samples per axiom");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << e.what() << "\n";
        return kParseError;
    }

    detail::Printer p{as_json, out};
    try {
        if (beta_encode_cmd->parsed()) {
            std::vector<Int> xs;
            for (const auto& a : beta_args) xs.push_back(parse_nat(a));
            Int code = beta_encode(xs).code;
            p.line(to_string(code), json{{"code", to_string(code)}});
        } else if (beta_get_cmd->parsed()) {
            Int x = beta_get(parse_nat(beta_w), parse_nat(beta_i));
            p.line(to_string(x), json{{"value", to_string(x)}});
        } else if (beta_decode_cmd->parsed()) {
            std::vector<Int> xs = beta_decode(BetaSeq{parse_nat(beta_s)});
            std::vector<std::string> rendered;
            for (const Int& x : xs) rendered.push_back(to_string(x));
            p.line(detail::join(rendered, " "), json{{"values", rendered}});
        } else if (beta_append_cmd->parsed()) {
            Int code = beta_append(BetaSeq{parse_nat(beta_s)}, parse_nat(beta_x)).code;
            p.line(to_string(code), json{{"code", to_string(code)}});
        } else if (dy_enc->parsed()) {
            Int code = sm_encode(dy_word);
            p.line(to_string(code), json{{"code", to_string(code)}});
        } else if (dy_dec->parsed()) {
            std::string w = sm_decode(parse_nat(dy_n));
            p.line(w, json{{"word", w}});
        } else if (dy_cat->parsed()) {
            Int code = dyad_concat(parse_nat(dy_m), parse_nat(dy_n));
            p.line(to_string(code), json{{"code", to_string(code)}});
        } else if (urs_enc->parsed()) {
            SmUrString s = urs_empty();
            for (const auto& a : urs_vals) s = urs_concat(s, urs_singleton(parse_nat(a)));
            p.line(to_string(s.mask) + " " + to_string(s.payload),
                   json{{"mask", to_string(s.mask)}, {"payload", to_string(s.payload)}});
        } else if (urs_dec->parsed()) {
            std::vector<Int> xs = urs_decode(SmUrString{parse_nat(urs_mask), parse_nat(urs_payload)});
            std::vector<std::string> rendered;
            for (const Int& x : xs) rendered.push_back(to_string(x));
            p.line(detail::join(rendered, " "), json{{"values", rendered}});
        } else if (mk_enc->parsed()) {
            ModelId m = detail::model_from_flag(model_flag);
            Mat2 mat = encode_string(m, mk_word);
            p.line(render_mat(mat), json{{"model", model_name(m)}, {"matrix", render_mat(mat)}});
        } else if (mk_dec->parsed()) {
            ModelId m = detail::model_from_flag(model_flag);
            std::string w = decode_string(parse_mat(m, mk_matrix));
            p.line(w, json{{"word", w}});
        } else if (mk_nf->parsed()) {
            ModelId m = detail::model_from_flag(model_flag);
            RunNF nf = detail::nf_in_m2_or_nat(m, mk_matrix);
            p.line(render_nf(nf), json{{"model", model_name(m)}, {"nf", render_nf(nf)}});
        } else if (mk_prof->parsed()) {
            ModelId m = detail::model_from_flag(model_flag);
            auto prof = profile(detail::nf_in_m2_or_nat(m, mk_matrix));
            p.line(render_profile(prof), json{{"profile", render_profile(prof)}});
        } else if (mk_cut->parsed()) {
            ModelId m = detail::model_from_flag(model_flag);
            RunNF nf = detail::nf_in_m2_or_nat(m, mk_matrix);
            Cut cut{mk_run, parse_poly(mk_offset)};
            Mat2 prefix = prefix_at_cut(nf, cut);
            json rec{{"prefix", render_mat(prefix)}};
            std::string text = render_mat(prefix);
            if (!mk_target.empty()) {
                ModelId target = detail::model_from_flag(mk_target);
                bool in = cut_in_model(nf, cut, target);
                text += std::string("\nin ") + model_name(target) + ": " + (in ? "yes" : "no");
                rec["target"] = model_name(target);
                rec["in_model"] = in;
            }
            p.line(text, rec);
        } else if (mk_uenc->parsed()) {
            ModelId m = detail::model_from_flag(model_flag);
            std::vector<ModelElem> xs;
            for (const auto& a : mk_elems) xs.push_back(ModelElem(m, parse_poly(a)));
            Mat2 mat = urs_encode(m, xs);
            p.line(render_mat(mat), json{{"model", model_name(m)}, {"matrix", render_mat(mat)}});
        } else if (mk_udec->parsed()) {
            ModelId m = detail::model_from_flag(model_flag);
            auto xs = urs_decode(parse_mat(m, mk_matrix));
            if (!xs) throw DomainViolation("not decodable in " +
                                           std::string(model_name(m)) + ": division left the model");
            std::vector<std::string> rendered;
            for (const ModelElem& x : *xs) rendered.push_back(render_poly(x.value()));
            p.line(detail::join(rendered, " "), json{{"values", rendered}});
        } else if (tc_refine->parsed()) {
            Partition alpha = make_partition(detail::split_parts(tc_parts1));
            Partition beta = make_partition(detail::split_parts(tc_parts2));
            if (alpha.base != tc_word || beta.base != tc_word) throw BaseMismatch();
            CommonRefinement cr = common_refinement(alpha, beta);
            std::vector<std::string> fs, gs;
            for (std::size_t i : cr.f) fs.push_back(std::to_string(i));
            for (std::size_t i : cr.g) gs.push_back(std::to_string(i));
            std::string text = "gamma: " + detail::join(cr.gamma.parts, "|") +
                               "\nf: " + detail::join(fs, " ") + "\ng: " + detail::join(gs, " ");
            p.line(text, json{{"gamma", cr.gamma.parts}, {"f", cr.f}, {"g", cr.g}});
        } else if (srs_nf_cmd->parsed()) {
            std::string w = srs_normalize(srs_w1);
            p.line(w, json{{"nf", w}});
        } else if (srs_cat->parsed()) {
            std::string w = srs_concat(srs_normalize(srs_w1), srs_normalize(srs_w2));
            p.line(w, json{{"nf", w}});
        } else if (ax_check->parsed()) {
            auto target = axiomlab::parse_target(ax_target);
            auto axiom = axiomlab::parse_axiom(ax_axiom);
            if (!target) throw ParseError(0, "target id");
            if (!axiom) throw ParseError(0, "axiom id");
            axiomlab::CheckReport rep = axiomlab::check_axiom(*target, *axiom, cfg);
            std::string text = rep.axiom + " @ " + rep.target + ": " +
                               axiomlab::status_name(rep.status);
            if (rep.status == axiomlab::Status::Holds)
                text += " (" + std::to_string(rep.samples) + " samples)";
            if (!rep.witness.empty()) text += " witness=[" + detail::join(rep.witness, ", ") + "]";
            p.line(text, json{{"axiom", rep.axiom},
                              {"target", rep.target},
                              {"status", axiomlab::status_name(rep.status)},
                              {"samples", rep.samples},
                              {"witness", rep.witness}});
        } else if (ax_suite->parsed()) {
            axiomlab::SuiteSummary s = axiomlab::run_suite(cfg);
            for (const auto& row : s.rows) {
                std::string text = row.target + " " + row.axiom + " expected=" +
                                   axiomlab::status_name(row.expected) + " actual=" +
                                   axiomlab::status_name(row.report.status) +
                                   (row.ok ? "" : "  MISMATCH");
                p.line(text, json{{"target", row.target},
                                  {"axiom", row.axiom},
                                  {"expected", axiomlab::status_name(row.expected)},
                                  {"actual", axiomlab::status_name(row.report.status)},
                                  {"ok", row.ok},
                                  {"witness", row.report.witness}});
            }
            std::string text = "suite: " + std::to_string(s.rows.size()) + " rows, " +
                               std::to_string(s.mismatches) + " mismatches, " +
                               std::to_string(s.unknowns) + " unknown";
            p.line(text, json{{"rows", s.rows.size()},
                              {"mismatches", s.mismatches},
                              {"unknowns", s.unknowns}});
            return s.ok() ? kOk : 1;
        }
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kParseError;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return kDomainError;
    }
    return kOk;
}

}  // namespace urcode::cli
