#pragma once
// Kneading series of an admissible pair, its smallest positive root, entropy
// and Hausdorff dimension (in bits, so dim = h), renewal-system entropy, the
// beta-expansion toolkit, and the mod-1 Lorenz map with its projection.

#include "lexishift/poly.hpp"
#include "lexishift/seq.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <variant>

namespace lexishift {

// K(t) = head(t) + t^u * tail_poly(t) / (1 - t^v) where head collects the
// coefficients c_0 = 1, c_i = b_i - a_i for i <= u (u = common preperiod
// length) and tail_poly(t) = sum_{j=1..v} c_{u+j} t^j over one period.
struct KneadingSeries {
    Poly head, tail_poly;
    std::size_t u = 0, v = 1;
};

inline KneadingSeries kneading_series(const EPSeq& alpha, const EPSeq& beta) {
    require_admissible(alpha, beta);
    KneadingSeries ks;
    ks.u = std::max(alpha.pre.size(), beta.pre.size());
    ks.v = std::lcm(alpha.per.size(), beta.per.size());
    auto c = [&](std::size_t i) {  // i >= 1
        return static_cast<long long>(beta.at(i - 1)) - static_cast<long long>(alpha.at(i - 1));
    };
    ks.head.assign(ks.u + 1, 0);
    ks.head[0] = 1;
    for (std::size_t i = 1; i <= ks.u; ++i) ks.head[i] = c(i);
    ks.tail_poly.assign(ks.v + 1, 0);
    for (std::size_t j = 1; j <= ks.v; ++j) ks.tail_poly[j] = c(ks.u + j);
    ks.head = poly_trim(std::move(ks.head));
    ks.tail_poly = poly_trim(std::move(ks.tail_poly));
    return ks;
}

// N(t) = head(t)(1 - t^v) + t^u tail_poly(t); K and N share signs on (0,1).
inline Poly kneading_numerator(const KneadingSeries& ks) {
    Poly one_minus_tv(ks.v + 1, 0);
    one_minus_tv[0] = 1;
    one_minus_tv[ks.v] -= 1;
    return poly_add(poly_mul(ks.head, one_minus_tv), poly_shift(ks.tail_poly, ks.u));
}

inline Rat kneading_eval(const KneadingSeries& ks, const Rat& t) {
    if (t <= 0 || t >= 1) fail("DomainError", "kneading series is evaluated on (0,1)");
    Rat tv = 1;
    for (std::size_t i = 0; i < ks.v; ++i) tv *= t;
    Rat tu = 1;
    for (std::size_t i = 0; i < ks.u; ++i) tu *= t;
    return eval_rat(ks.head, t) + tu * eval_rat(ks.tail_poly, t) / (1 - tv);
}

struct EntropyResult {
    std::optional<double> kappa;  // smallest positive root of K; absent => h = 0
    double h_bits = 0.0;
    double dim = 0.0;
    bool exact_root = false;

    bool no_root() const { return !kappa.has_value(); }
};

inline EntropyResult entropy_from_numerator(const Poly& numerator) {
    EntropyResult r;
    auto root = smallest_root_in_01(numerator);
    if (!root) return r;
    r.kappa = root->value;
    r.exact_root = root->exact;
    r.h_bits = std::max(0.0, -std::log2(root->value));
    r.dim = r.h_bits;
    return r;
}

inline EntropyResult entropy_of(const EPSeq& alpha, const EPSeq& beta) {
    return entropy_from_numerator(kneading_numerator(kneading_series(alpha, beta)));
}

// Unique root in (0,1) of 1 - t^{l_omega} - t^{l_nu} (the first-return
// renewal system over blocks of those two lengths).
inline EntropyResult renewal_entropy(std::size_t l_omega, std::size_t l_nu) {
    if (l_omega < 1 || l_nu < 1) fail("DomainError", "renewal block lengths must be >= 1");
    Poly n(std::max(l_omega, l_nu) + 1, 0);
    n[0] = 1;
    n[l_omega] -= 1;
    n[l_nu] -= 1;
    return entropy_from_numerator(n);
}

// ---------------------------------------------------------------------------
// beta-expansion toolkit

// The unique beta in (1,2] with 1 = sum alpha_i beta^-i, by exact-sign
// bisection on F(x) = sum alpha_i x^i - 1 (increasing in x), x = 1/beta.
inline double beta_of(const EPSeq& alpha) {
    if (alpha.at(0) != '1') fail("BadLeadingSymbol", "expansion of 1 must start with digit 1");
    if (alpha.pre.empty() && alpha.per == "1") return 2.0;
    const std::size_t u = alpha.pre.size(), v = alpha.per.size();
    auto F = [&](const Rat& x) -> Rat {
        Rat xu = 1, acc = 0;
        for (std::size_t i = 1; i <= u; ++i) {
            xu *= x;
            if (alpha.at(i - 1) == '1') acc += xu;
        }
        Rat xv = 1, per_sum = 0, xj = 1;
        for (std::size_t j = 1; j <= v; ++j) {
            xj *= x;
            if (alpha.at(u + j - 1) == '1') per_sum += xj;
            xv *= x;
        }
        return acc + xu * per_sum / (1 - xv) - 1;
    };
    Rat lo(1, 2), hi;
    int slo = detail::rat_sign(F(lo));
    if (slo == 0) return 2.0;  // only 1^inf sums to 1 at x = 1/2 (handled above)
    bool bracketed = false;
    for (int m = 2; m <= 46; ++m) {
        Rat cand = 1 - Rat(BigInt(1), BigInt(1) << m);
        int s = detail::rat_sign(F(cand));
        if (s == 0) return to_double(1 / cand);
        if (s > 0) {
            hi = cand;
            bracketed = true;
            break;
        }
        lo = cand;
    }
    if (!bracketed) return 1.0;  // degenerate: at most one 1-digit overall
    const Rat width(BigInt(1), BigInt("100000000000000"));  // 1e-14
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        int s = detail::rat_sign(F(mid));
        if (s == 0) return to_double(1 / mid);
        (s < 0 ? lo : hi) = mid;
    }
    return to_double(2 / (lo + hi));
}

// First n greedy digits of x in base beta (digits clamped to {0,1} so the
// expansion of 1 in base 2 is 1^inf).
inline Word greedy_expansion(const Rat& x, double beta, std::size_t n) {
    if (x < 0 || x > 1) fail("DomainError", "greedy expansion requires 0 <= x <= 1");
    if (!(beta > 1.0 && beta <= 2.0 + 1e-12)) fail("DomainError", "greedy expansion requires beta in (1,2]");
    double y = to_double(x);
    Word out;
    for (std::size_t i = 0; i < n; ++i) {
        double p = beta * y;
        int d = static_cast<int>(std::floor(p + 1e-12));
        d = std::min(std::max(d, 0), 1);
        y = p - d;
        if (std::fabs(y) < 1e-12) y = 0.0;
        out += static_cast<char>('0' + d);
    }
    return out;
}

// Quasi-greedy expansion of 1, from the greedy expansion given symbolically:
// a finite greedy expansion d_1..d_k 0^inf becomes (d_1..d_{k-1} 0)^inf (the
// classical rule; in binary d_k = 1 so both published readings agree), with
// the base-2 edge d = 1 0^inf pinned to 1^inf; an infinite greedy expansion
// is already quasi-greedy.
inline EPSeq quasi_greedy_one(const EPSeq& greedy) {
    if (greedy.at(0) != '1') fail("BadLeadingSymbol", "expansion of 1 must start with digit 1");
    if (greedy.per != "0") return greedy;
    if (greedy.pre == "1") return EPSeq("", "1");
    Word w = greedy.pre;  // canonical form ends with the final digit 1
    w.back() = '0';
    return EPSeq("", w);
}

// Numeric variant: iterate the greedy digits of 1 in base beta; if the orbit
// terminates the finite rule applies (returns an EPSeq), otherwise the first
// 64 digits are returned as a plain truncated word.
inline std::variant<EPSeq, Word> quasi_greedy_one(double beta) {
    if (!(beta > 1.0 && beta <= 2.0 + 1e-12)) fail("DomainError", "quasi-greedy requires beta in (1,2]");
    if (beta >= 2.0 - 1e-12) return EPSeq("", "1");
    // Termination tolerance 1e-10: the orbit error grows like beta^k times
    // the input rounding, so a tighter snap would miss genuinely finite
    // expansions once k reaches double digits.
    double y = 1.0;
    Word digits;
    for (int i = 0; i < 64; ++i) {
        double p = beta * y;
        int d = static_cast<int>(std::floor(p + 1e-10));
        d = std::min(std::max(d, 0), 1);
        y = p - d;
        digits += static_cast<char>('0' + d);
        if (d == 1 && std::fabs(y) < 1e-10) {
            Word w = digits;
            w.back() = '0';
            return EPSeq("", w);
        }
    }
    return digits;
}

// ---------------------------------------------------------------------------
// mod-1 Lorenz maps g(x) = beta_t * x + alpha_t (mod 1)

inline void check_lorenz_params(double beta_t, double alpha_t) {
    if (!(beta_t > 1.0 && beta_t < 2.0)) fail("DomainError", "slope must lie in (1,2)");
    if (!(alpha_t > 0.0 && alpha_t < 2.0 - beta_t))
        fail("DomainError", "offset must lie in (0, 2 - slope)");
}

inline double mod1_eval(double beta_t, double alpha_t, double x) {
    check_lorenz_params(beta_t, alpha_t);
    if (!(x >= 0.0 && x <= 1.0)) fail("DomainError", "argument must lie in [0,1]");
    double c = (1.0 - alpha_t) / beta_t;  // branch cut: g(c^-) -> 1, g(c^+) -> 0
    return x < c ? beta_t * x + alpha_t : beta_t * x + alpha_t - 1.0;
}

// pi(x) = alpha_t/(beta_t - 1) + sum x_n beta_t^-n, summed in closed form
// over the preperiod and one period.
inline double lorenz_project(double beta_t, double alpha_t, const EPSeq& x) {
    check_lorenz_params(beta_t, alpha_t);
    const std::size_t u = x.pre.size(), v = x.per.size();
    double inv = 1.0 / beta_t, pw = 1.0, pre_sum = 0.0;
    for (std::size_t i = 1; i <= u; ++i) {
        pw *= inv;
        if (x.at(i - 1) == '1') pre_sum += pw;
    }
    double per_sum = 0.0, pj = 1.0;
    for (std::size_t j = 1; j <= v; ++j) {
        pj *= inv;
        if (x.at(u + j - 1) == '1') per_sum += pj;
    }
    double tail = pw * per_sum / (1.0 - std::pow(inv, static_cast<double>(v)));
    return alpha_t / (beta_t - 1.0) + pre_sum + tail;
}

}  // namespace lexishift
