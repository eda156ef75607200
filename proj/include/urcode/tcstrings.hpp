#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "urcode/numeric.hpp"

namespace urcode {

// --- Partitions of concrete free-monoid words ---

using Word = std::string;
using RefinementMap = std::vector<std::size_t>;

struct Partition {
    Word base;
    std::vector<Word> parts;  // non-empty, concatenating to base

    bool operator==(const Partition&) const = default;
};

inline Partition make_partition(const std::vector<Word>& parts) {
    Word base;
    for (const Word& p : parts) {
        if (p.empty()) throw DomainViolation("partition parts must be non-empty");
        base += p;
    }
    return Partition{base, parts};
}

// f maps the finer partition's indices onto the coarser one's: surjective,
// weakly monotone, and each target part is the concatenation of its block.
inline bool refinement_check(const Partition& fine, const Partition& coarse,
                             const RefinementMap& f) {
    if (fine.base != coarse.base) return false;
    if (f.size() != fine.parts.size()) return false;
    std::size_t expected = 0;
    std::vector<Word> assembled(coarse.parts.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] > expected) {
            if (f[i] != expected + 1) return false;  // monotone, no gaps
            expected = f[i];
        } else if (f[i] < expected) {
            return false;
        }
        if (f[i] >= coarse.parts.size()) return false;
        assembled[f[i]] += fine.parts[i];
    }
    if (!fine.parts.empty() && expected + 1 != coarse.parts.size()) return false;  // surjective
    if (fine.parts.empty() && !coarse.parts.empty()) return false;
    return assembled == coarse.parts;
}

struct CommonRefinement {
    Partition gamma;
    RefinementMap f;  // gamma -> alpha
    RefinementMap g;  // gamma -> beta
};

namespace detail {

// Recursive construction: peel the last parts, mediate them with the
// concrete Editors witness, recurse on the rest. Builds gamma of length
// at most |alpha| + |beta| - 1.
inline CommonRefinement refine_rec(std::vector<Word> a, std::vector<Word> b) {
    if (a.empty() && b.empty()) return {Partition{"", {}}, {}, {}};
    // Both are partitions of the same word, so neither is empty here.
    Word u = a.back();
    Word v = b.back();
    a.pop_back();
    b.pop_back();
    if (u.size() >= v.size()) {
        // u = z*v; alpha_1 := alpha_0 (z), recurse against beta_0.
        Word z = u.substr(0, u.size() - v.size());
        std::vector<Word> a1 = a;
        if (!z.empty()) a1.push_back(z);
        CommonRefinement rec = refine_rec(a1, b);
        CommonRefinement out;
        out.gamma.parts = rec.gamma.parts;
        out.gamma.parts.push_back(v);
        for (Word& w : out.gamma.parts) out.gamma.base += w;
        // Map: parts of gamma_0 landing in z belong to alpha's last part.
        for (std::size_t i = 0; i < rec.f.size(); ++i)
            out.f.push_back(rec.f[i] >= a.size() ? a.size() : rec.f[i]);
        out.f.push_back(a.size());
        out.g = rec.g;
        out.g.push_back(b.size());
        return out;
    }
    // Symmetric case: v = z*u.
    Word z = v.substr(0, v.size() - u.size());
    std::vector<Word> b1 = b;
    if (!z.empty()) b1.push_back(z);
    CommonRefinement rec = refine_rec(a, b1);
    CommonRefinement out;
    out.gamma.parts = rec.gamma.parts;
    out.gamma.parts.push_back(u);
    for (Word& w : out.gamma.parts) out.gamma.base += w;
    out.f = rec.f;
    out.f.push_back(a.size());
    for (std::size_t i = 0; i < rec.g.size(); ++i)
        out.g.push_back(rec.g[i] >= b.size() ? b.size() : rec.g[i]);
    out.g.push_back(b.size());
    return out;
}

}  // namespace detail

inline CommonRefinement common_refinement(const Partition& alpha, const Partition& beta) {
    if (alpha.base != beta.base) throw BaseMismatch();
    CommonRefinement out = detail::refine_rec(alpha.parts, beta.parts);
    return out;
}

// The unique morphism delta -> gamma when delta refines gamma; greedy
// block matching (uniqueness is the left-cancellation collapse).
inline std::optional<RefinementMap> embed(const Partition& delta, const Partition& gamma) {
    if (delta.base != gamma.base) return std::nullopt;
    RefinementMap f;
    std::size_t target = 0;
    Word acc;
    for (const Word& part : delta.parts) {
        if (target >= gamma.parts.size()) return std::nullopt;
        acc += part;
        f.push_back(target);
        if (acc.size() > gamma.parts[target].size()) return std::nullopt;
        if (acc == gamma.parts[target]) {
            ++target;
            acc.clear();
        }
    }
    if (!acc.empty()) return std::nullopt;
    if (target != gamma.parts.size()) return std::nullopt;
    return f;
}

// --- Ur-strings over strings: the b-prefix translation ---

inline Word urs_str_singleton(const Word& x) {
    if (x.find('b') != Word::npos)
        throw DomainViolation("ur-string component must be b-free");
    return "b" + x;
}

inline Word urs_str_concat(const Word& s, const Word& t) { return s + t; }

inline std::vector<Word> urs_str_decode(const Word& s) {
    if (s.empty()) return {};
    if (s[0] != 'b') throw DomainViolation("ur-string must be empty or start with b");
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i + 1;
        while (j < s.size() && s[j] != 'b') ++j;
        out.push_back(s.substr(i + 1, j - i - 1));
        i = j;
    }
    return out;
}

// --- The abc -> b rewriting model: tc with both cancellations, no bi-cancellation ---

inline bool srs_is_normal(const Word& w) { return w.find("abc") == Word::npos; }

// Applies abc -> b to a fixed point. The redexes never overlap, so the
// result is independent of strategy; we contract leftmost-innermost.
inline Word srs_normalize(Word w) {
    require_word(w, "abc");
    for (;;) {
        std::size_t pos = w.find("abc");
        if (pos == Word::npos) return w;
        w.replace(pos, 3, "b");
    }
}

inline Word srs_concat(const Word& x, const Word& y) {
    return srs_normalize(srs_normalize(x) + srs_normalize(y));
}

// x diamond y = u diamond v, all normal: finds the mediating w by bounded
// search. A witness for normal inputs never needs more than |x| + |y| + 3
// letters, so the bound is exhaustive.
inline std::optional<std::pair<Side, Word>> srs_editors_witness(const Word& x, const Word& y,
                                                                const Word& u, const Word& v) {
    for (const Word* w : {&x, &y, &u, &v})
        if (!srs_is_normal(*w)) throw PreconditionViolated("arguments must be normal");
    if (srs_concat(x, y) != srs_concat(u, v))
        throw PreconditionViolated("srs_editors_witness: products differ");
    const std::size_t bound = x.size() + y.size() + 3;
    std::vector<Word> frontier{""};
    for (std::size_t len = 0; len <= bound; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            if (!srs_is_normal(w)) continue;  // extensions stay reducible
            if (srs_concat(x, w) == u && srs_concat(w, v) == y)
                return std::make_pair(Side::Left, w);
            if (srs_concat(u, w) == x && srs_concat(w, y) == v)
                return std::make_pair(Side::Right, w);
            if (len < bound)
                for (char c : {'a', 'b', 'c'}) next.push_back(w + c);
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

// a diamond b diamond c = b with a, c non-empty: refutes bi-cancellation.
inline std::tuple<Word, Word, Word> srs_bicancel_counterexample() {
    return {"b", "a", "c"};
}

}  // namespace urcode
