#pragma once
// Renormalisation layer: associated substitution-window pairs, renormalisation
// boxes, tower detection and stripping, the renewal-family certificate, the
// hole-to-pair reductions, and the end-to-end classifier that ties entropy,
// component structure, and intrinsic-ergodicity verdicts together.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entropy.hpp"
#include "seq.hpp"
#include "sft.hpp"
#include "words.hpp"

namespace lexishift {

// ---------------------------------------------------------------------------
// Associated pairs: the window words (omega, nu) of a renormalisation.
// ---------------------------------------------------------------------------

// A valid pair must satisfy, writing w^inf for the periodic sequence:
//   1. omega is its own cyclically 0-maximal rotation (vacuous if all zeros),
//   2. nu is its own cyclically 1-minimal rotation (vacuous if all ones),
//   3. (0-max rotation of nu)^inf <= omega^inf,
//   4. nu^inf <= (1-min rotation of omega)^inf,
//   5. total length at least 3.
// Clauses 3 and 4 are non-strict: for the balanced window pairs (xi_r, zeta_r)
// the two words are rotations of each other, so both comparisons hold with
// equality, and those pairs must be valid (they bound the dyadic boxes).
struct AssocPair {
    Word omega;
    Word nu;

    // Empty string = valid; otherwise the first violated clause.
    static std::string violation(const Word& w, const Word& v) {
        if (w.empty() || v.empty()) return "window words must be nonempty";
        for (char c : w)
            if (c != '0' && c != '1') return "omega must be a binary word";
        for (char c : v)
            if (c != '0' && c != '1') return "nu must be a binary word";
        if (w.size() + v.size() < 3) return "total window length must be at least 3";
        if (w.find('0') == Word::npos) return "omega must contain the symbol 0";
        if (v.find('1') == Word::npos) return "nu must contain the symbol 1";
        bool w_mixed = w.find('1') != Word::npos;
        bool v_mixed = v.find('0') != Word::npos;
        if (w_mixed && cyclic_extremes(w).first != w)
            return "omega is not its own 0-maximal rotation";
        if (v_mixed && cyclic_extremes(v).second != v)
            return "nu is not its own 1-minimal rotation";
        if (v_mixed) {
            Word vmax = cyclic_extremes(v).first;
            if (!preceq(EPSeq(Word{}, vmax), EPSeq(Word{}, w)))
                return "the 0-maximal rotation of nu exceeds omega";
        }
        if (w_mixed) {
            Word wmin = cyclic_extremes(w).second;
            if (!preceq(EPSeq(Word{}, v), EPSeq(Word{}, wmin)))
                return "nu exceeds the 1-minimal rotation of omega";
        }
        return {};
    }

    static bool valid(const Word& w, const Word& v) { return violation(w, v).empty(); }

    AssocPair(Word w, Word v) : omega(std::move(w)), nu(std::move(v)) {
        std::string why = violation(omega, nu);
        if (!why.empty()) fail("ParseError", "(" + omega + ", " + nu + "): " + why);
    }

    std::size_t total_length() const { return omega.size() + nu.size(); }
    bool operator==(const AssocPair&) const = default;
};

// ---------------------------------------------------------------------------
// Renormalisation boxes.
// ---------------------------------------------------------------------------

// A level-n box is the image of the base box of an associated pair under the
// chain of balanced substitutions rho(r1), ..., rho(rn), applied in the order
// stored in `ratios` (ratios[0] innermost, i.e. applied first).
struct RenormBox {
    AssocPair base;
    std::vector<Ratio> ratios;

    std::size_t level() const { return ratios.size(); }
};

// Corners in (0-extended x, 1-extended y) coordinates:
//   x in [omega^inf, omega (nu)^inf],  y in [nu (omega)^inf, nu^inf],
// then pushed through the ratio chain. Order: {x_lo, x_hi, y_lo, y_hi}.
inline std::array<EPSeq, 4> box_corners(const RenormBox& box) {
    std::array<EPSeq, 4> c = {
        EPSeq(Word{}, box.base.omega),
        EPSeq(box.base.omega, box.base.nu),
        EPSeq(box.base.nu, box.base.omega),
        EPSeq(Word{}, box.base.nu),
    };
    for (const Ratio& r : box.ratios) {
        Substitution s = rho(r);
        for (EPSeq& corner : c) corner = substitute(s, corner);
    }
    return c;
}

// Closed-box membership test for a kneading pair (alpha, beta): prepend the
// fixed first symbols (0 to alpha, 1 to beta), peel the ratio chain from the
// outermost substitution inwards by decoding, then compare against the base
// corners. Any decode failure means the point is outside the box.
inline bool box_contains(const RenormBox& box, const EPSeq& alpha, const EPSeq& beta) {
    EPSeq x = prepend('0', alpha);
    EPSeq y = prepend('1', beta);
    for (auto it = box.ratios.rbegin(); it != box.ratios.rend(); ++it) {
        Substitution s = rho(*it);
        DecodeResult dx = decode(s, x);
        DecodeResult dy = decode(s, y);
        if (!dx.ok || !dy.ok) return false;
        x = dx.blocks;
        y = dy.blocks;
    }
    EPSeq x_lo(Word{}, box.base.omega), x_hi(box.base.omega, box.base.nu);
    EPSeq y_lo(box.base.nu, box.base.omega), y_hi(Word{}, box.base.nu);
    return preceq(x_lo, x) && preceq(x, x_hi) && preceq(y_lo, y) && preceq(y, y_hi);
}

// Exact squared diameter. The x-side of the base box spans sequences that
// first differ at position |omega| (the corners share the prefix omega and
// then split), so its metric length is 2^-(|omega|+1); likewise the y-side.
// Each substitution in the chain multiplies block positions by its length
// q = denominator, scaling both side lengths by 2^-(... ) exactly:
//   side_x = 2^-(Q*|omega| + 1), side_y = 2^-(Q*|nu| + 1), Q = prod q_i.
inline Rat box_diameter_sq(const RenormBox& box) {
    BigInt scale = 1;
    for (const Ratio& r : box.ratios) scale *= r.q;
    auto side_sq = [&](std::size_t len) {
        BigInt exponent = scale * BigInt(static_cast<long long>(len)) + 1;
        BigInt denom = BigInt(1) << static_cast<unsigned>(exponent);
        return Rat(BigInt(1), denom * denom);
    };
    return side_sq(box.base.omega.size()) + side_sq(box.base.nu.size());
}

inline double box_diameter(const RenormBox& box) {
    return std::sqrt(to_double(box_diameter_sq(box)));
}

// Disjointness of two boxes of the same level. Boxes are closed products of
// lexicographic intervals, so they are disjoint iff the x-intervals or the
// y-intervals are disjoint. Comparing boxes of different levels is a category
// error in the stratification and raises StrataMismatch.
inline bool boxes_disjoint(const RenormBox& lhs, const RenormBox& rhs) {
    if (lhs.level() != rhs.level())
        fail("StrataMismatch", "cannot compare boxes of levels " +
                                   std::to_string(lhs.level()) + " and " +
                                   std::to_string(rhs.level()));
    std::array<EPSeq, 4> a = box_corners(lhs);
    std::array<EPSeq, 4> b = box_corners(rhs);
    bool x_disjoint = prec(a[1], b[0]) || prec(b[1], a[0]);
    bool y_disjoint = prec(a[3], b[2]) || prec(b[3], a[2]);
    return x_disjoint || y_disjoint;
}

// ---------------------------------------------------------------------------
// Tower maps: apply / strip chains of balanced substitutions.
// ---------------------------------------------------------------------------

// Push a kneading pair through rho(ratios[0]), then rho(ratios[1]), ...
// The substitutions act on the 0/1-extended sequences; the images drop their
// first symbol again to come back to kneading coordinates.
inline std::pair<EPSeq, EPSeq> chain_apply(const EPSeq& alpha, const EPSeq& beta,
                                           const std::vector<Ratio>& ratios) {
    EPSeq x = prepend('0', alpha);
    EPSeq y = prepend('1', beta);
    for (const Ratio& r : ratios) {
        Substitution s = rho(r);
        x = substitute(s, x);
        y = substitute(s, y);
    }
    return {shift(x, 1), shift(y, 1)};
}

struct Derenormalisation {
    EPSeq base_alpha;
    EPSeq base_beta;
    std::vector<Ratio> ratios;  // application order: ratios[0] innermost

    std::size_t level() const { return ratios.size(); }
};

// Strip every balanced-substitution layer from an admissible pair. At each
// level the dyadic boxes of distinct ratios are pairwise disjoint, so at most
// one ratio can match; a candidate only counts when both decoded sequences
// form an admissible pair again (this excludes corner pairs such as
// ((10),(01)), which decode under rho(1/2) to the inadmissible ((0),(1))).
// The result always satisfies chain_apply(base, ratios) == input.
inline Derenormalisation derenormalise(const EPSeq& alpha, const EPSeq& beta) {
    require_admissible(alpha, beta);
    double h = entropy_of(alpha, beta).h_bits;

    EPSeq a = alpha, b = beta;
    std::vector<Ratio> discovered;  // outermost first
    BigInt q_product = 1;
    for (int depth = 0; depth <= 64; ++depth) {
        // A level-n tower divides entropy by q1*...*qn <= 2^n; positive
        // entropy therefore bounds the depth. h * q_product > 1 would mean
        // the base had entropy above 1 bit, which is impossible.
        if (depth == 64 || (h > 0 && to_double(Rat(q_product)) * h > 1.0 + 1e-9))
            fail("InfiniteRenormalisationSuspected",
                 "tower stripping did not terminate for (" + a.str() + ", " + b.str() + ")");

        EPSeq x = prepend('0', a);
        std::optional<Ratio> found;
        std::pair<EPSeq, EPSeq> next;
        std::size_t q_max = x.per.size();
        for (std::size_t q = 2; q <= q_max && !found; ++q) {
            for (std::size_t p = 1; p < q && !found; ++p) {
                if (std::gcd(p, q) != 1) continue;
                Ratio r(static_cast<long>(p), static_cast<long>(q));
                auto [xi, zeta] = sturmian_pair(r);
                RenormBox box{AssocPair(xi, zeta), {}};
                if (!box_contains(box, a, b)) continue;
                Substitution s = rho(r);
                DecodeResult dx = decode(s, prepend('0', a));
                DecodeResult dy = decode(s, prepend('1', b));
                if (!dx.ok || !dy.ok) continue;
                EPSeq cand_a = shift(dx.blocks, 1);
                EPSeq cand_b = shift(dy.blocks, 1);
                if (!admissible(cand_a, cand_b).ok) continue;  // corner exclusion
                found = r;
                next = {cand_a, cand_b};
            }
        }
        if (!found) break;
        discovered.push_back(*found);
        q_product *= found->q;
        a = next.first;
        b = next.second;
    }

    Derenormalisation d;
    d.base_alpha = a;
    d.base_beta = b;
    d.ratios.assign(discovered.rbegin(), discovered.rend());
    auto [ra, rb] = chain_apply(d.base_alpha, d.base_beta, d.ratios);
    if (!(ra == alpha && rb == beta))
        fail("InternalError", "tower strip round trip failed for (" + alpha.str() +
                                  ", " + beta.str() + ")");
    return d;
}

// ---------------------------------------------------------------------------
// General (omega, nu) renormalisation detection.
// ---------------------------------------------------------------------------

struct RenormDetection {
    AssocPair assoc;
    EPSeq alpha_blocks;  // 0-extended alpha in window coordinates (0 = omega)
    EPSeq beta_blocks;   // 1-extended beta in window coordinates (1 = nu)
};

// Render a block sequence as an omega/nu run pattern, e.g. "w v^2 (v w)^inf".
inline std::string block_pattern(const EPSeq& blocks) {
    auto runs = [](const Word& w) {
        std::string out;
        for (std::size_t i = 0; i < w.size();) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (!out.empty()) out += ' ';
            out += (w[i] == '0') ? "w" : "v";
            if (j - i > 1) out += "^" + std::to_string(j - i);
            i = j;
        }
        return out;
    };
    std::string head = runs(blocks.pre);
    std::string cycle = "(" + runs(blocks.per) + ")^inf";
    return head.empty() ? cycle : head + " " + cycle;
}

// Search for a window pair (omega, nu) that renormalises the pair: omega must
// be a prefix of the 0-extension of alpha, nu a prefix of the 1-extension of
// beta, the pair must satisfy the AssocPair invariants, both extensions must
// decode into the windows, and the decoded pair must itself be admissible
// (again excluding corner pairs). Candidates are scanned in order of total
// length, then omega length, so the smallest window wins deterministically.
inline std::optional<RenormDetection> detect_renorm(const EPSeq& alpha, const EPSeq& beta) {
    require_admissible(alpha, beta);
    EPSeq x = prepend('0', alpha);
    EPSeq y = prepend('1', beta);
    auto prefix_of = [](const EPSeq& s, std::size_t n) {
        Word w;
        w.reserve(n);
        for (std::size_t i = 0; i < n; ++i) w += s.at(i);
        return w;
    };
    std::size_t wx_max = x.bound();
    std::size_t wy_max = y.bound();
    for (std::size_t total = 3; total <= wx_max + wy_max; ++total) {
        for (std::size_t lw = 1; lw < total && lw <= wx_max; ++lw) {
            std::size_t lv = total - lw;
            if (lv < 1 || lv > wy_max) continue;
            Word w = prefix_of(x, lw);
            Word v = prefix_of(y, lv);
            if (!AssocPair::valid(w, v)) continue;
            Substitution s(w, v);
            DecodeResult dx = decode(s, x);
            if (!dx.ok) continue;
            DecodeResult dy = decode(s, y);
            if (!dy.ok) continue;
            EPSeq base_a = shift(dx.blocks, 1);
            EPSeq base_b = shift(dy.blocks, 1);
            if (!admissible(base_a, base_b).ok) continue;
            return RenormDetection{AssocPair(w, v), dx.blocks, dy.blocks};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// The renewal family: the two-component, non-intrinsically-ergodic pairs.
// ---------------------------------------------------------------------------

// Family member k >= 0 has windows omega = 01 and nu_k = 100 (10)^k, giving
// kneading pair alpha = (omega nu_k)-induced (01)-side sequence and its twin.
// The mirrored member swaps the roles through the 0/1 bit flip.
struct HofbauerWitness {
    std::size_t k = 0;
    bool mirrored = false;
    std::size_t level = 0;       // tower layers stripped before the match
    std::vector<Ratio> ratios;   // the stripped layers, application order
};

// Match a *base* pair (already tower-stripped) against the family.
inline std::optional<HofbauerWitness> hofbauer_match_base(const EPSeq& alpha,
                                                          const EPSeq& beta) {
    EPSeq x = prepend('0', alpha);
    EPSeq y = prepend('1', beta);
    std::size_t cap = std::max(x.bound(), y.bound()) + 2;
    for (std::size_t k = 0; 3 + 2 * k <= cap; ++k) {
        Word omega = "01";
        Word nu = "100";
        for (std::size_t i = 0; i < k; ++i) nu += "10";
        // Direct orientation: 0-extension = omega (nu)^inf, 1-ext = nu (omega)^inf.
        if (x == EPSeq(omega, nu) && y == EPSeq(nu, omega))
            return HofbauerWitness{k, false, 0, {}};
        Word omega_m = mirror_word(omega);
        Word nu_m = mirror_word(nu);
        if (x == EPSeq(nu_m, omega_m) && y == EPSeq(omega_m, nu_m))
            return HofbauerWitness{k, true, 0, {}};
    }
    return std::nullopt;
}

// Full check: strip the tower first, then match the base; a positive result
// certifies the two-equal-components structure (hence not intrinsically
// ergodic) at whatever tower level the input sits.
inline std::optional<HofbauerWitness> hofbauer_check(const EPSeq& alpha, const EPSeq& beta) {
    Derenormalisation d = derenormalise(alpha, beta);
    auto m = hofbauer_match_base(d.base_alpha, d.base_beta);
    if (!m) return std::nullopt;
    m->level = d.level();
    m->ratios = d.ratios;
    return m;
}

// ---------------------------------------------------------------------------
// Hole reductions: from an interval (a, b) to a kneading pair.
// ---------------------------------------------------------------------------

enum class HoleKind { Centred, Right, Left, HalfLeft, Other };

inline std::string hole_kind_str(HoleKind k) {
    switch (k) {
        case HoleKind::Centred: return "Centred";
        case HoleKind::Right: return "Right";
        case HoleKind::Left: return "Left";
        case HoleKind::HalfLeft: return "HalfLeft";
        default: return "Other";
    }
}

// Largest entropy-plateau representative below the input: repeatedly apply
// the plateau step (which replaces a non-admissible upper sequence by the
// periodic word it plateaus with) until the sequence dominates its shifts.
// Each step strictly shortens the defining period, so this terminates.
inline EPSeq parry_floor(EPSeq x) {
    for (std::size_t guard = x.bound() + 2; guard > 0; --guard) {
        if (is_parry(x)) return x;
        x = varsigma(x);
    }
    fail("InternalError", "plateau iteration did not converge");
}

struct Hole {
    Rat a;
    Rat b;
    HoleKind kind = HoleKind::Other;
};

struct HolePair {
    Hole hole;
    bool has_pair = false;  // false => no implemented symbolic reduction
    EPSeq alpha;
    EPSeq beta;
    std::optional<double> beta_value;  // beta-shift parameter for one-sided holes
    std::string note;
};

// Classify the hole's shape and reduce it to a kneading pair where a
// reduction is known:
//   Centred  (1/4,1/2) x (1/2,3/4): alpha = sigma(expand(a)), beta = sigma(expand(b)).
//   Right    (a,1), 1/2 < a < 1:    survivor = beta-shift with upper sequence
//            parry_floor(expand(a)); pair (y, (0)^inf).
//   Left     (0,b), 0 < b < 1/2:    mirror of Right through x -> 1-x.
//   HalfLeft (a,1/2), 1/4 < a < 1/2: doubling maps the survivor into the
//            right half; same beta-shift with parameter sequence from 2a.
//   Other:   weakly centred holes (a < 1/2 < b) still reduce through the
//            expansions; anything else keeps has_pair = false.
inline HolePair hole_to_pair(const Rat& a, const Rat& b) {
    if (a < 0 || b > 1) fail("ParseError", "hole endpoints must lie in [0, 1]");
    if (!(a < b)) fail("EndpointOrder", "hole requires a < b, got (" + rat_str(a) +
                                            ", " + rat_str(b) + ")");
    const Rat half(1, 2), quarter(1, 4), three_quarters(3, 4);
    HolePair out;
    out.hole.a = a;
    out.hole.b = b;

    if (quarter < a && a < half && half < b && b < three_quarters) {
        out.hole.kind = HoleKind::Centred;
        out.alpha = shift(expand(a), 1);
        out.beta = shift(expand(b), 1);
        out.has_pair = true;
        return out;
    }
    if (b == 1 && half < a && a < 1) {
        out.hole.kind = HoleKind::Right;
        EPSeq y = parry_floor(expand(a));
        if (!(y == expand(a)))
            out.note = "endpoint sits on the entropy plateau of " + y.str();
        out.alpha = y;
        out.beta = EPSeq(Word{}, Word{"0"});
        out.beta_value = beta_of(y);
        out.has_pair = true;
        return out;
    }
    if (a == 0 && Rat(0) < b && b < half) {
        out.hole.kind = HoleKind::Left;
        EPSeq y = parry_floor(mirror(expand(b)));
        if (!(y == mirror(expand(b))))
            out.note = "endpoint sits on the entropy plateau of " + mirror(y).str();
        out.alpha = EPSeq(Word{}, Word{"1"});
        out.beta = mirror(y);
        out.beta_value = beta_of(y);
        out.has_pair = true;
        return out;
    }
    if (b == half && quarter < a && a < half) {
        out.hole.kind = HoleKind::HalfLeft;
        EPSeq y = parry_floor(expand(Rat(2) * a));
        if (!(y == expand(Rat(2) * a)))
            out.note = "endpoint sits on the entropy plateau of " + y.str();
        out.alpha = y;
        out.beta = EPSeq(Word{}, Word{"0"});
        out.beta_value = beta_of(y);
        out.has_pair = true;
        return out;
    }
    out.hole.kind = HoleKind::Other;
    if (a < half && half < b) {  // weakly centred: the expansions still apply
        out.alpha = shift(expand(a), 1);
        out.beta = shift(expand(b), 1);
        out.has_pair = true;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classification.
// ---------------------------------------------------------------------------

struct Classification {
    std::string tag;  // FullShift | ZeroEntropy | Essential | RenormalisableSFT |
                      // RenormalisableNonSFT | HofbauerNonIE | CodedLimit | Extremal
    std::size_t level = 0;
    std::vector<Ratio> ratios;     // tower layers, application order
    EPSeq base_alpha;              // tower base (== input when level = 0)
    EPSeq base_beta;
    EntropyResult entropy;         // of the *input* pair
    IEVerdict ie;
    std::optional<RenormDetection> renorm;     // window structure at the base
    std::optional<HofbauerWitness> hofbauer;   // renewal-family certificate
    bool trivial_renorm = false;   // detected window of minimal total length 3
    std::string note;
    // Hole context; only set when classification started from an interval.
    std::string hole_kind;
    std::optional<double> beta_value;
};

// Decision order:
//   not admissible            -> Extremal (outside the admissible world)
//   literal ((1),(0))         -> FullShift
//   kneading series rootless  -> ZeroEntropy
//   otherwise strip the tower, then at the base:
//     renewal-family match    -> HofbauerNonIE  (certified two-component tie)
//     window detected         -> RenormalisableSFT if the base pair is purely
//                                periodic, else RenormalisableNonSFT
//     no window, periodic     -> Essential
//     no window, preperiodic  -> CodedLimit
// The IE verdict comes from the component oracle on the *input* automaton;
// for the certified family it is promoted to NotIntrinsicallyErgodic, and for
// the non-SFT tags (where the finite oracle can only see an approximating
// automaton) the theorem-backed IntrinsicallyErgodic verdict takes over.
inline Classification classify(const EPSeq& alpha, const EPSeq& beta) {
    Classification c;
    Verdict v = admissible(alpha, beta);
    if (!v.ok) {
        c.tag = "Extremal";
        c.base_alpha = alpha;
        c.base_beta = beta;
        c.note = v.reason;
        c.ie.kind = IEKind::ZeroEntropy;
        c.ie.provenance = "theorem";
        return c;
    }

    c.entropy = entropy_of(alpha, beta);
    c.base_alpha = alpha;
    c.base_beta = beta;

    if (alpha == EPSeq(Word{}, Word{"1"}) && beta == EPSeq(Word{}, Word{"0"})) {
        c.tag = "FullShift";
        c.ie = ie_from_components(components(build_automaton(alpha, beta)), false);
        return c;
    }
    if (c.entropy.no_root()) {
        c.tag = "ZeroEntropy";
        c.ie = ie_from_components(components(build_automaton(alpha, beta)), false);
        c.ie.provenance = "oracle";
        return c;
    }

    Derenormalisation d = derenormalise(alpha, beta);
    c.level = d.level();
    c.ratios = d.ratios;
    c.base_alpha = d.base_alpha;
    c.base_beta = d.base_beta;

    std::vector<ComponentReport> reps = components(build_automaton(alpha, beta));
    c.hofbauer = hofbauer_match_base(d.base_alpha, d.base_beta);
    c.ie = ie_from_components(reps, c.hofbauer.has_value());

    if (c.hofbauer) {
        c.hofbauer->level = c.level;
        c.hofbauer->ratios = c.ratios;
        c.tag = "HofbauerNonIE";
        c.ie.provenance = "theorem";
        return c;
    }

    c.renorm = detect_renorm(d.base_alpha, d.base_beta);
    if (c.renorm) {
        c.trivial_renorm = c.renorm->assoc.total_length() == 3;
        bool sft_base = d.base_alpha.periodic() && d.base_beta.periodic();
        c.tag = sft_base ? "RenormalisableSFT" : "RenormalisableNonSFT";
        if (!sft_base) {
            // The finite oracle truncates the non-SFT language; the unique-
            // measure statement for these towers is theorem-backed.
            c.ie.kind = IEKind::IntrinsicallyErgodic;
            c.ie.provenance = "theorem";
            c.ie.max_entropy_bits = c.entropy.h_bits;
        }
        return c;
    }

    bool sft = d.base_alpha.periodic() && d.base_beta.periodic();
    c.tag = sft ? "Essential" : "CodedLimit";
    if (!sft) {
        c.ie.kind = IEKind::IntrinsicallyErgodic;
        c.ie.provenance = "theorem";
        c.ie.max_entropy_bits = c.entropy.h_bits;
    }
    return c;
}

inline Classification classify(const Rat& a, const Rat& b) {
    HolePair hp = hole_to_pair(a, b);
    if (!hp.has_pair)
        fail("Unsupported", "no symbolic reduction implemented for the hole (" +
                                rat_str(a) + ", " + rat_str(b) + ")");
    Classification c = classify(hp.alpha, hp.beta);
    c.hole_kind = hole_kind_str(hp.hole.kind);
    c.beta_value = hp.beta_value;
    if (!hp.note.empty()) c.note = c.note.empty() ? hp.note : c.note + "; " + hp.note;
    return c;
}

}  // namespace lexishift
