// Acceptance suite: one pass/fail line per criterion, non-zero exit on any
// failure. Parameters (sample counts, bounds, time budgets) are fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "urcode/axiomlab_suite.hpp"
#include "urcode/beta.hpp"
#include "urcode/cli.hpp"

using namespace urcode;
namespace lab = urcode::axiomlab;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        ok = false;
        note += " [over time budget]";
    }
    if (!ok) ++failures;
    std::printf("%s  criterion %2d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                secs, note.c_str());
    std::fflush(stdout);
}

std::vector<std::string> words_up_to(std::size_t max_len, const std::string& alphabet) {
    std::vector<std::string> out{""};
    std::vector<std::string> layer{""};
    for (std::size_t n = 1; n <= max_len; ++n) {
        std::vector<std::string> next;
        for (const std::string& w : layer)
            for (char c : alphabet) next.push_back(w + c);
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::vector<std::vector<Word>> partitions_of(const Word& w) {
    if (w.empty()) return {{}};
    std::vector<std::vector<Word>> out;
    std::size_t cuts = w.size() - 1;
    for (std::size_t mask = 0; mask < (1u << cuts); ++mask) {
        std::vector<Word> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i < cuts; ++i)
            if (mask & (1u << i)) {
                parts.push_back(w.substr(start, i + 1 - start));
                start = i + 1;
            }
        parts.push_back(w.substr(start));
        out.push_back(parts);
    }
    return out;
}

}  // namespace

int main() {
    // 1. The length-first table, rows 0..19, both directions.
    criterion(1, "dyadic table rows 0..19 round trip", 1.0, [] {
        const std::vector<std::string> table = {
            "",    "a",   "b",   "aa",  "ab",  "ba",  "bb",  "aaa", "aab",  "aba",
            "abb", "baa", "bab", "bba", "bbb", "aaaa", "aaab", "aaba", "aabb", "abaa"};
        for (std::size_t n = 0; n < table.size(); ++n) {
            if (sm_decode(Int(static_cast<unsigned long>(n))) != table[n]) return false;
            if (sm_encode(table[n]) != Int(static_cast<unsigned long>(n))) return false;
        }
        return true;
    });

    // 2. Dyadic algebra on 10^4 random pairs below 2^64; pairing injectivity
    //    brute-forced below 64.
    criterion(2, "dyadic algebra laws, 10^4 pairs", 0, [] {
        lab::Rng rng(0);
        Int bound = (Int(1) << 64) - 1;
        for (int i = 0; i < 10000; ++i) {
            Int x = lab::gen_nat(rng, bound), y = lab::gen_nat(rng, bound);
            Int z = lab::gen_nat(rng, bound);
            if (sm_decode(dyad_concat(x, y)) != sm_decode(x) + sm_decode(y)) return false;
            if (ell(dyad_concat(x, y)) != ell(x) * ell(y)) return false;
            if (lambda_tally(dyad_concat(x, y)) !=
                dyad_concat(lambda_tally(x), lambda_tally(y)))
                return false;
            if (y != z && dyad_concat(x, y) == dyad_concat(x, z)) return false;
            if (y != z && dyad_concat(y, x) == dyad_concat(z, x)) return false;
        }
        std::set<Int> codes;
        for (Int x = 0; x < 64; ++x)
            for (Int y = 0; y < 64; ++y)
                if (!codes.insert(dyad_pair(x, y)).second) return false;
        return true;
    });

    // 3. Beta round trips: 10^3 random lists, length <= 8, elements <= 10^4.
    criterion(3, "beta encode/decode/append on 10^3 lists", 10.0, [] {
        lab::Rng rng(1);
        for (int t = 0; t < 1000; ++t) {
            std::vector<Int> xs;
            std::size_t n = rng.below(9);
            for (std::size_t i = 0; i < n; ++i) xs.push_back(lab::gen_nat(rng, Int(10000)));
            BetaSeq s = beta_encode(xs);
            if (beta_decode(s) != xs) return false;
            Int extra = lab::gen_nat(rng, Int(10000));
            std::vector<Int> extended = xs;
            extended.push_back(extra);
            if (beta_decode(beta_append(s, extra)) != extended) return false;
        }
        return true;
    });

    // 4. All 2^13-1 words of length <= 12: encode, pop-decode, determinant 1.
    criterion(4, "markov isomorphism on all words of length <= 12", 0, [] {
        auto words = words_up_to(12, "ab");
        if (words.size() != (1u << 13) - 1) return false;
        for (const auto& w : words) {
            Mat2 m = encode_string(ModelId::Nat, w);
            if (m.a() * m.d() != m.b() * m.c() + Poly::constant(Rat(1))) return false;
            if (decode_string(m) != w) return false;
        }
        return true;
    });

    // 5. Fibonacci entries of (BA)^n for n <= 20, against the recurrence.
    criterion(5, "fibonacci entries of (BA)^n", 0, [] {
        std::vector<Int> f{1, 0};  // F(-1), F(0)
        for (int k = 1; k <= 41; ++k) f.push_back(f[k] + f[k - 1]);
        Mat2 ba = encode_string(ModelId::Nat, "ba");
        Mat2 acc = Mat2::identity(ModelId::Nat);
        for (int n = 1; n <= 20; ++n) {
            acc = mat_mul(acc, ba);
            if (acc.a() != Poly::constant(f[2 * n]) || acc.b() != Poly::constant(f[2 * n + 1]) ||
                acc.c() != Poly::constant(f[2 * n + 1]) || acc.d() != Poly::constant(f[2 * n + 2]))
                return false;
        }
        return true;
    });

    // 6. Editors over every factorization pair from words of length <= 8,
    //    plus the exact non-discrete failure.
    criterion(6, "editors witnesses exact; Q>=0 quadruple fails with -3/5", 0, [] {
        for (const auto& w : words_up_to(8, "ab")) {
            std::vector<Mat2> prefix, suffix;
            for (std::size_t i = 0; i <= w.size(); ++i) {
                prefix.push_back(encode_string(ModelId::Nat, w.substr(0, i)));
                suffix.push_back(encode_string(ModelId::Nat, w.substr(i)));
            }
            for (std::size_t i = 0; i <= w.size(); ++i)
                for (std::size_t j = 0; j <= w.size(); ++j) {
                    auto o = editors_split(prefix[i], suffix[i], prefix[j], suffix[j]);
                    if (!o.found) return false;
                    const Mat2& eta = *o.witness;
                    if (o.side == Side::Right) {
                        if (mat_mul(prefix[j], eta) != prefix[i]) return false;
                        if (mat_mul(eta, suffix[i]) != suffix[j]) return false;
                    } else {
                        if (mat_mul(prefix[i], eta) != prefix[j]) return false;
                        if (mat_mul(eta, suffix[j]) != suffix[i]) return false;
                    }
                }
        }
        lab::QnnQuad q = lab::qnn_editors_quad();
        auto bad = editors_split(q.alpha, q.beta, q.gamma, q.delta);
        return !bad.found && bad.mu.b == parse_poly("-3/5") && bad.mu.c == parse_poly("3/5");
    });

    // 7. The four displayed normal forms, exact symbolic matches.
    criterion(7, "normal forms of frak A, B, S and A[X:=3X]", 4.0, [] {
        Mat2 a2 = lab::to_model(lab::frak_a(), ModelId::M2);
        if (normal_form(a2) != lab::expected_nf_a()) return false;
        if (render_nf(normal_form(a2)) != "B^{1/3*X} A^2 B^4 A^{1/3*X}") return false;
        if (normal_form(lab::to_model(lab::frak_b(), ModelId::M2)) != lab::expected_nf_b())
            return false;
        if (normal_form(lab::to_model(lab::frak_s(), ModelId::M2)) != lab::expected_nf_s())
            return false;
        RunNF app = normal_form(subst_x(a2, parse_poly("3*X")));
        if (render_nf(app) != "B^{X} A^2 B^4 A^{X}") return false;
        return true;
    });

    // 8. Norm descent on 10^3 random M2 matrices built from <= 6 runs.
    criterion(8, "ordinal norm descent on 10^3 random M2 matrices", 0, [] {
        lab::Rng rng(2);
        for (int i = 0; i < 1000; ++i) {
            Mat2 m = lab::gen_run_matrix(rng, ModelId::M2, 6, 2, 10);
            std::vector<OrdNorm> trace;
            RunNF nf = normal_form(m, &trace);
            if (eval_runs(nf) != m) return false;
            for (std::size_t k = 0; k + 1 < trace.size(); ++k)
                if (!(trace[k + 1] < trace[k])) return false;
        }
        return true;
    });

    // 9. Reverse-mathematics fixtures.
    criterion(9, "bezout/euclidean fixtures and nat ur-string round trips", 0, [] {
        Mat2 a = lab::frak_a();
        auto rep = bez_euc_check(ModelElem(ModelId::M0, a.a()), ModelElem(ModelId::M0, a.b()),
                                 ModelElem(ModelId::M0, a.c()), ModelElem(ModelId::M0, a.d()));
        if (!rep.bezout || rep.ab_euclidean) return false;

        Mat2 bb = mat_mul(Mat2::atom_b(ModelId::M0), lab::frak_b());
        if (urs_pop(bb).has_value()) return false;

        lab::Rng rng(3);
        for (int i = 0; i < 1000; ++i) {
            auto xs = lab::gen_elem_list(rng, ModelId::Nat, 6, 1000);
            auto back = urs_decode(urs_encode(ModelId::Nat, xs));
            if (!back || *back != xs) return false;
        }
        return true;
    });

    // 10. Partition laws, exhaustively over base words of length <= 6.
    criterion(10, "common refinements over all bases of length <= 6", 0, [] {
        for (const Word& w : words_up_to(6, "ab")) {
            auto parts = partitions_of(w);
            for (const auto& pa : parts)
                for (const auto& pb : parts) {
                    Partition alpha{w, pa}, beta{w, pb};
                    auto cr = common_refinement(alpha, beta);
                    if (!pa.empty() && cr.gamma.parts.size() > pa.size() + pb.size() - 1)
                        return false;
                    if (!refinement_check(cr.gamma, alpha, cr.f)) return false;
                    if (!refinement_check(cr.gamma, beta, cr.g)) return false;
                    std::set<std::pair<std::size_t, std::size_t>> seen;
                    for (std::size_t i = 0; i < cr.f.size(); ++i)
                        if (!seen.insert({cr.f[i], cr.g[i]}).second) return false;
                    for (const auto& pd : parts) {
                        Partition delta{w, pd};
                        if (embed(delta, alpha) && embed(delta, beta)) {
                            auto h = embed(delta, cr.gamma);
                            if (!h || !refinement_check(delta, cr.gamma, *h)) return false;
                        }
                    }
                }
        }
        return true;
    });

    // 11. SRS: exhaustive confluence to length 10, bi-cancellation failure,
    //     sampled tc laws and both cancellations.
    criterion(11, "srs confluence <= 10, counterexample, sampled laws", 0, [] {
        std::map<Word, std::set<Word>> memo;
        std::function<const std::set<Word>&(const Word&)> nfs =
            [&](const Word& w) -> const std::set<Word>& {
            auto it = memo.find(w);
            if (it != memo.end()) return it->second;
            std::set<Word> out;
            for (std::size_t i = 0; i + 3 <= w.size(); ++i)
                if (w.compare(i, 3, "abc") == 0) {
                    const auto& sub = nfs(w.substr(0, i) + "b" + w.substr(i + 3));
                    out.insert(sub.begin(), sub.end());
                }
            if (out.empty()) out.insert(w);
            return memo.emplace(w, std::move(out)).first->second;
        };
        for (const Word& w : words_up_to(10, "abc")) {
            const auto& set = nfs(w);
            if (set.size() != 1 || *set.begin() != srs_normalize(w)) return false;
        }

        auto [x, u, v] = srs_bicancel_counterexample();
        if (srs_concat(srs_concat(u, x), v) != x || u.empty() || v.empty()) return false;

        lab::SampleConfig cfg;
        cfg.seed = 0;
        cfg.count = 64;
        for (int idx = 1; idx <= 7; ++idx) {
            auto rep = lab::check_axiom(*lab::parse_target("str-srs"),
                                        lab::AxiomId{lab::Family::TC, idx, false}, cfg);
            if (rep.status != lab::Status::Holds) return false;
        }
        // right cancellation, sampled directly
        lab::Rng rng(4);
        std::vector<Word> normals;
        for (const Word& w : words_up_to(4, "abc"))
            if (srs_is_normal(w)) normals.push_back(w);
        for (int i = 0; i < 3000; ++i) {
            const Word& a2 = normals[rng.below(normals.size())];
            const Word& b2 = normals[rng.below(normals.size())];
            const Word& c2 = normals[rng.below(normals.size())];
            if (srs_concat(a2, c2) == srs_concat(b2, c2) && a2 != b2) return false;
            if (srs_concat(c2, a2) == srs_concat(c2, b2) && a2 != b2) return false;
        }
        return true;
    });

    // 12. The axiom suite under seed 0: no mismatches, no unknowns.
    criterion(12, "axiom suite matrix, seed 0", 60.0, [] {
        lab::SampleConfig cfg;
        cfg.seed = 0;
        lab::SuiteSummary s = lab::run_suite(cfg);
        for (const auto& row : s.rows)
            if (!row.ok) std::fprintf(stderr, "  mismatch: %s %s\n", row.target.c_str(),
                                      row.axiom.c_str());
        return s.mismatches == 0 && s.unknowns == 0;
    });

    if (failures) std::printf("%d criteria failed\n", failures);
    return failures ? 1 : 0;
}
