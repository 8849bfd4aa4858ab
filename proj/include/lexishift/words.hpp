#pragma once
// Combinatorics on words: cyclic balance, extremal rotations, the Sturmian
// pair ξ_r/ζ_r for a ratio r = p/q, two-image substitutions, and their
// deterministic inverse (block decoding) on eventually periodic sequences.

#include "lexishift/seq.hpp"

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace lexishift {

// r = p/q in lowest terms with 0 < p < q (p = number of 1s, q = length).
struct Ratio {
    long p = 1, q = 2;

    Ratio() = default;
    Ratio(long p_, long q_) : p(p_), q(q_) {
        if (p <= 0 || q <= p) fail("ParseError", "ratio requires 0 < p < q");
        long g = std::gcd(p, q);
        p /= g;
        q /= g;
    }

    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
    bool operator==(const Ratio&) const = default;
};

inline Ratio parse_ratio(const std::string& text) {
    Rat r = parse_rat(text);
    if (r <= 0 || r >= 1) fail("ParseError", "ratio must lie in (0,1): '" + text + "'");
    return Ratio(numerator(r).convert_to<long>(), denominator(r).convert_to<long>());
}

// ω is cyclically balanced iff ω² is balanced: for each length n in
// [2, ℓ(ω)], all length-n factors of ω² have 1-counts within 1.
inline bool is_cyclically_balanced(const Word& w) {
    if (w.empty()) fail("ParseError", "balance check requires a non-empty word");
    Word sq = w + w;
    for (std::size_t n = 2; n <= w.size(); ++n) {
        std::size_t lo = n, hi = 0;
        for (std::size_t s = 0; s + n <= sq.size(); ++s) {
            std::size_t c = ones(sq.substr(s, n));
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

// (0-max_w, 1-min_w): the lexicographically largest rotation starting with 0
// and the smallest starting with 1.
inline std::pair<Word, Word> cyclic_extremes(const Word& w) {
    std::optional<Word> zero_max, one_min;
    for (const Word& r : rotations(w)) {
        if (r[0] == '0') {
            if (!zero_max || r > *zero_max) zero_max = r;
        } else {
            if (!one_min || r < *one_min) one_min = r;
        }
    }
    if (!zero_max || !one_min)
        fail("NoSuchRotation", "word is constant: '" + w + "'");
    return {*zero_max, *one_min};
}

// Independent brute-force oracle: every cyclically balanced word of length q
// with p ones, in lexicographic order.
inline std::vector<Word> enumerate_balanced(const Ratio& r) {
    if (r.q > 26) fail("DomainError", "exhaustive enumeration is limited to q <= 26");
    std::vector<Word> out;
    for (unsigned long mask = 0; mask < (1ul << r.q); ++mask) {
        Word w(static_cast<std::size_t>(r.q), '0');
        for (long i = 0; i < r.q; ++i)
            if (mask & (1ul << (r.q - 1 - i))) w[static_cast<std::size_t>(i)] = '1';
        if (ones(w) == static_cast<std::size_t>(r.p) && is_cyclically_balanced(w))
            out.push_back(std::move(w));
    }
    return out;  // ascending mask order == lexicographic order
}

// Direct O(q) construction: the mechanical word of slope p/q, whose rotations
// are exactly the q cyclically balanced words; extremes picked from it.
inline std::pair<Word, Word> sturmian_pair(const Ratio& r) {
    Word s;
    for (long i = 0; i < r.q; ++i)
        s += char('0' + ((i + 1) * r.p / r.q - i * r.p / r.q));
    return cyclic_extremes(s);
}

// ρ(0) = image0 (starts with 0), ρ(1) = image1 (starts with 1); the distinct
// leading symbols make decoding deterministic.
struct Substitution {
    Word image0, image1;

    Substitution(Word w0, Word w1) : image0(std::move(w0)), image1(std::move(w1)) {
        if (image0.empty() || image0[0] != '0' || !is_binary_word(image0))
            fail("ParseError", "substitution image of 0 must start with 0");
        if (image1.empty() || image1[0] != '1' || !is_binary_word(image1))
            fail("ParseError", "substitution image of 1 must start with 1");
    }

    const Word& image(char c) const { return c == '0' ? image0 : image1; }
    std::string str() const { return "0->" + image0 + ",1->" + image1; }
};

// ρ_r: 0 ↦ ξ_r, 1 ↦ ζ_r.
inline Substitution rho(const Ratio& r) {
    auto [xi, zeta] = sturmian_pair(r);
    return Substitution(xi, zeta);
}

inline Word substitute(const Substitution& s, const Word& w) {
    Word out;
    for (char c : w) out += s.image(c);
    return out;
}

// Preperiod and period map independently; the result is re-canonicalised.
inline EPSeq substitute(const Substitution& s, const EPSeq& x) {
    return EPSeq(substitute(s, x.pre), substitute(s, x.per));
}

struct DecodeResult {
    bool ok = false;
    EPSeq blocks;              // valid iff ok
    std::size_t failure_pos = 0;  // 1-based index of the unparseable block's first symbol
};

// Unique parse of x as a concatenation of image0/image1 blocks. Termination:
// block-start positions inside the periodic tail repeat after at most
// |period| visits, at which point the block sequence is periodic too.
inline DecodeResult decode(const Substitution& s, const EPSeq& x) {
    std::vector<long> seen(x.per.size(), -1);  // block index by periodic phase
    Word blocks;
    std::size_t pos = 0;
    for (;;) {
        if (pos >= x.pre.size()) {
            std::size_t phase = (pos - x.pre.size()) % x.per.size();
            long first = seen[phase];
            if (first >= 0) {
                return {true,
                        EPSeq(blocks.substr(0, static_cast<std::size_t>(first)),
                              blocks.substr(static_cast<std::size_t>(first))),
                        0};
            }
            seen[phase] = static_cast<long>(blocks.size());
        }
        const Word& img = s.image(x.at(pos));
        for (std::size_t i = 0; i < img.size(); ++i) {
            if (x.at(pos + i) != img[i]) return {false, EPSeq{}, pos + 1};
        }
        blocks += (x.at(pos) == '0') ? '0' : '1';
        pos += img.size();
    }
}

}  // namespace lexishift
