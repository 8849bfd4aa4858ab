#pragma once
// Integer-coefficient polynomials (ascending order), exact rational
// evaluation, exact ascending division, and the sign-scan + bisection root
// finder used for kneading numerators and renewal polynomials.

#include "lexishift/rational.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace lexishift {

using Poly = std::vector<long long>;  // p[i] = coefficient of t^i

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(std::move(r));
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(std::move(r));
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(std::move(r));
}

inline Poly poly_shift(const Poly& a, std::size_t k) {
    if (a.empty()) return {};
    Poly r(a.size() + k, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

inline Rat eval_rat(const Poly& p, const Rat& t) {
    Rat acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
    return acc;
}

inline double eval_double(const Poly& p, double t) {
    double acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + static_cast<double>(p[i]);
    return acc;
}

// Exact quotient of n by d in ascending order (d must have constant term ±1,
// which keeps all intermediate coefficients integral). Returns nothing unless
// the remainder is identically zero.
inline std::optional<Poly> poly_divide_exact(const Poly& n_in, const Poly& d_in) {
    Poly n = poly_trim(n_in), d = poly_trim(d_in);
    if (d.empty() || (d[0] != 1 && d[0] != -1))
        fail("DomainError", "ascending division requires divisor constant term +/-1");
    if (n.empty()) return Poly{};
    if (n.size() < d.size()) return std::nullopt;
    std::size_t qdeg = n.size() - d.size();
    Poly q(qdeg + 1, 0), r = n;
    for (std::size_t i = 0; i <= qdeg; ++i) {
        long long qi = r[i] / d[0];
        q[i] = qi;
        if (qi != 0)
            for (std::size_t j = 0; j < d.size(); ++j) r[i + j] -= qi * d[j];
    }
    for (long long c : r)
        if (c != 0) return std::nullopt;
    return poly_trim(std::move(q));
}

inline Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(static_cast<long long>(i) * p[i]);
    return poly_trim(std::move(d));
}

namespace detail {
using RatPoly = std::vector<Rat>;

inline void ratpoly_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo b in Q[t] (b nonzero); exact rational arithmetic.
inline RatPoly ratpoly_mod(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i + 1 < b.size(); ++i) a[i + shift] -= c * b[i];
        a.pop_back();  // leading term cancels exactly
        ratpoly_trim(a);
    }
    return a;
}

// Exact quotient n / d in Q[t], converted back to integer coefficients.
// Returns nothing if the remainder is nonzero or the quotient is not integral.
inline std::optional<Poly> poly_divide_by_factor(const Poly& n, const Poly& d) {
    RatPoly a(n.begin(), n.end()), b(d.begin(), d.end());
    ratpoly_trim(a);
    ratpoly_trim(b);
    if (b.empty()) return std::nullopt;
    if (a.empty()) return Poly{};
    if (a.size() < b.size()) return std::nullopt;
    RatPoly q(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) a[i + shift] -= c * b[i];
        a.pop_back();
        ratpoly_trim(a);
    }
    if (!a.empty()) return std::nullopt;
    Poly out;
    for (const Rat& c : q) {
        if (denominator(c) != 1) return std::nullopt;
        out.push_back(c.convert_to<long long>());
    }
    return poly_trim(std::move(out));
}
}  // namespace detail

// Greatest common divisor in Q[t], returned as a primitive integer polynomial
// whose first nonzero coefficient is positive ({1} for coprime inputs, {} only
// when both inputs are zero).
inline Poly poly_gcd(const Poly& pa, const Poly& pb) {
    detail::RatPoly a(pa.begin(), pa.end()), b(pb.begin(), pb.end());
    detail::ratpoly_trim(a);
    detail::ratpoly_trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        detail::RatPoly r = detail::ratpoly_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return {};
    BigInt den = 1;
    for (const Rat& c : a) den = lcm(den, denominator(c));
    BigInt num = 0;
    for (const Rat& c : a) num = gcd(num, BigInt(numerator(c) * (den / denominator(c))));
    Rat scale(den, num);
    for (const Rat& c : a)
        if (c != 0) {
            if (c < 0) scale = -scale;
            break;
        }
    Poly out;
    for (const Rat& c : a) out.push_back(Rat(c * scale).convert_to<long long>());
    return out;
}

struct RootBracket {
    double value = 0;  // midpoint of [lo, hi] (== lo == hi when exact)
    bool exact = false;
    Rat lo, hi;
};

namespace detail {
inline int rat_sign(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline RootBracket bisect_root(const Poly& p, Rat lo, Rat hi) {
    // invariant: p(lo) > 0, p(hi) < 0
    const Rat width(BigInt(1), BigInt("10000000000000"));  // 1e-13
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        int s = rat_sign(eval_rat(p, mid));
        if (s == 0) return {to_double(mid), true, mid, mid};
        (s > 0 ? lo : hi) = mid;
    }
    Rat mid = (lo + hi) / 2;
    return {to_double(mid), false, lo, hi};
}
}  // namespace detail

// Smallest root of p in (0,1), located by exact sign evaluation on the grid
// k/1000 followed by probes 1 - 2^-m (m = 10..44) for roots near 1, then
// bisection to interval width 1e-13. Requires p(0) > 0. No sign change and no
// exact grid zero means no detectable root (the zero-entropy convention).
inline std::optional<RootBracket> smallest_root_in_01(const Poly& p_in) {
    Poly p = poly_trim(p_in);
    if (p.empty() || p[0] <= 0) fail("DomainError", "root scan requires positive constant term");
    // A repeated factor makes its even-multiplicity roots invisible to a sign
    // scan (the curve touches zero without crossing), so scan the square-free
    // part p / gcd(p, p') instead: same roots, all of them simple.
    if (Poly g = poly_gcd(p, poly_derivative(p)); g.size() >= 2)
        if (auto q = detail::poly_divide_by_factor(p, g)) p = *q;
    if (!p.empty() && p[0] < 0)
        for (long long& c : p) c = -c;
    Rat prev = 0;
    auto step = [&](const Rat& t) -> std::optional<RootBracket> {
        int s = detail::rat_sign(eval_rat(p, t));
        if (s == 0) return RootBracket{to_double(t), true, t, t};
        if (s < 0) return detail::bisect_root(p, prev, t);
        prev = t;
        return std::nullopt;
    };
    for (long k = 1; k <= 999; ++k)
        if (auto r = step(Rat(k, 1000))) return r;
    for (int m = 10; m <= 44; ++m)
        if (auto r = step(1 - Rat(BigInt(1), BigInt(1) << m))) return r;
    return std::nullopt;
}

}  // namespace lexishift
