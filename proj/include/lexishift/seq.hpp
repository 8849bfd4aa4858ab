#pragma once
// Eventually periodic binary sequences in canonical form, their decidable
// lexicographic calculus, and the exact correspondence with rationals in
// [0,1] under the binary projection.

#include "lexishift/rational.hpp"
#include "lexishift/word.hpp"

#include <compare>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace lexishift {

// Canonical form: the period is primitive and the preperiod is minimal (its
// last symbol differs from the last symbol of the period once the period is
// rotated into alignment). Two EPSeq denote the same infinite sequence iff
// their canonical forms are structurally identical.
struct EPSeq {
    Word pre;
    Word per;

    EPSeq() : per("0") {}

    EPSeq(Word pre_, Word per_) : pre(std::move(pre_)), per(std::move(per_)) {
        if (per.empty()) fail("ParseError", "empty period");
        per = primitive_root(per);
        while (!pre.empty() && pre.back() == per.back()) {
            per = per.back() + per.substr(0, per.size() - 1);
            pre.pop_back();
        }
    }

    char at(std::size_t i) const {
        if (i < pre.size()) return pre[i];
        return per[(i - pre.size()) % per.size()];
    }

    int bit(std::size_t i) const { return at(i) - '0'; }

    // All distinct shifts of the sequence arise with n < bound(); universally
    // quantified shift conditions are decided over n ≤ bound().
    std::size_t bound() const { return pre.size() + per.size(); }

    bool periodic() const { return pre.empty(); }

    std::string str() const { return pre + "(" + per + ")"; }

    // Grammar: seq := bits? '(' bits ')'
    static EPSeq parse(const std::string& text) {
        auto open = text.find('(');
        auto close = text.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close != text.size() - 1 ||
            close < open + 2)
            fail("ParseError", "sequence must match pre(per): '" + text + "'");
        std::string pre_text = text.substr(0, open);
        Word pre = pre_text.empty() ? Word{} : parse_word(pre_text);
        Word per = parse_word(text.substr(open + 1, close - open - 1));
        return EPSeq(pre, per);
    }

    bool operator==(const EPSeq& o) const = default;
};

inline EPSeq parse_seq(const std::string& text) { return EPSeq::parse(text); }

// Total lexicographic order, decided on a finite prefix: equality on the
// first max(|pre_x|,|pre_y|) + lcm(|per_x|,|per_y|) symbols persists forever.
inline int lex_cmp(const EPSeq& x, const EPSeq& y) {
    std::size_t n =
        std::max(x.pre.size(), y.pre.size()) + std::lcm(x.per.size(), y.per.size());
    for (std::size_t i = 0; i < n; ++i) {
        char a = x.at(i), b = y.at(i);
        if (a != b) return a < b ? -1 : 1;
    }
    return 0;
}

inline bool prec(const EPSeq& x, const EPSeq& y) { return lex_cmp(x, y) < 0; }
inline bool preceq(const EPSeq& x, const EPSeq& y) { return lex_cmp(x, y) <= 0; }

inline EPSeq shift(const EPSeq& x, std::size_t n) {
    if (n <= x.pre.size()) return EPSeq(x.pre.substr(n), x.per);
    std::size_t k = (n - x.pre.size()) % x.per.size();
    return EPSeq(Word{}, rotate_left(x.per, k));
}

inline EPSeq mirror(const EPSeq& x) { return EPSeq(mirror_word(x.pre), mirror_word(x.per)); }

inline EPSeq prepend(char c, const EPSeq& x) { return EPSeq(Word(1, c) + x.pre, x.per); }

// 2^{-j} with j the first differing index (1-based); 0 when equal.
inline Rat seq_dist(const EPSeq& x, const EPSeq& y) {
    std::size_t n =
        std::max(x.pre.size(), y.pre.size()) + std::lcm(x.per.size(), y.per.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (x.at(i) != y.at(i)) return Rat(BigInt(1), BigInt(1) << (i + 1));
    }
    return Rat(0);
}

// π(x) = Σ x_i / 2^i, exact: finite preperiod sum plus geometric tail.
inline Rat project(const EPSeq& x) {
    BigInt pre_int = 0, per_int = 0;
    for (char c : x.pre) pre_int = pre_int * 2 + (c - '0');
    for (char c : x.per) per_int = per_int * 2 + (c - '0');
    std::size_t u = x.pre.size(), v = x.per.size();
    BigInt two_u = BigInt(1) << u;
    BigInt two_v_m1 = (BigInt(1) << v) - 1;
    return Rat(pre_int, two_u) + Rat(per_int, two_u * two_v_m1);
}

// Inverse of project on [0,1]. Dyadic values get the terminating expansion
// followed by 0^∞ (so 1/2 ↦ 10^∞); no output ends in 1^∞ except expand(1).
inline EPSeq expand(const Rat& q) {
    if (q < 0 || q > 1) fail("ParseError", "expand requires a value in [0,1]");
    if (q == 0) return EPSeq(Word{}, "0");
    if (q == 1) return EPSeq(Word{}, "1");
    std::map<Rat, std::size_t> seen;
    std::string digits;
    Rat x = q;
    for (;;) {
        auto it = seen.find(x);
        if (it != seen.end())
            return EPSeq(digits.substr(0, it->second), digits.substr(it->second));
        seen.emplace(x, digits.size());
        x *= 2;
        if (x >= 1) {
            digits += '1';
            x -= 1;
        } else {
            digits += '0';
        }
    }
}

// Parry sequence: leading 1 and every shift lexicographically ≼ the sequence.
inline bool is_parry(const EPSeq& a) {
    if (a.at(0) != '1') return false;
    for (std::size_t n = 1; n <= a.bound(); ++n)
        if (lex_cmp(shift(a, n), a) > 0) return false;
    return true;
}

// ς(α) = (a_1 … a_{n-1} 0)^∞ with n = min{ n ≥ 1 : σ^n(α) ≽ α }; defined
// exactly when α starts with 1 and is not Parry.
inline EPSeq varsigma(const EPSeq& a) {
    if (a.at(0) != '1') fail("NotApplicable", "varsigma requires leading symbol 1");
    if (is_parry(a)) fail("NotApplicable", "varsigma requires a non-Parry input");
    for (std::size_t n = 1; n <= a.bound(); ++n) {
        if (lex_cmp(shift(a, n), a) >= 0) {
            Word p;
            for (std::size_t i = 0; i + 1 < n; ++i) p += a.at(i);
            p += '0';
            return EPSeq(Word{}, p);
        }
    }
    fail("NotApplicable", "no shift dominates the input");  // unreachable
}

struct Verdict {
    bool ok;
    std::string reason;  // empty when ok
};

// Admissible pair: α Parry, mirror(β) Parry, and every shift of α stays ≽ β
// while every shift of β stays ≼ α.
inline Verdict admissible(const EPSeq& a, const EPSeq& b) {
    if (!is_parry(a)) return {false, "alpha not Parry"};
    if (!is_parry(mirror(b))) return {false, "mirror(beta) not Parry"};
    for (std::size_t n = 0; n <= a.bound(); ++n)
        if (lex_cmp(shift(a, n), b) < 0) return {false, "a shift of alpha falls below beta"};
    for (std::size_t n = 0; n <= b.bound(); ++n)
        if (lex_cmp(shift(b, n), a) > 0) return {false, "a shift of beta rises above alpha"};
    return {true, {}};
}

inline void require_admissible(const EPSeq& a, const EPSeq& b) {
    Verdict v = admissible(a, b);
    if (!v.ok) fail("NotAdmissible", v.reason);
}

}  // namespace lexishift
