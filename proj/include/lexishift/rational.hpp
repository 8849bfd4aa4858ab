#pragma once
// Exact arithmetic foundation: arbitrary-precision integers and rationals,
// shared error type, and the fixed textual formats for reals and rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lexishift {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// All domain failures carry a stable machine-readable code alongside the
// human message; the CLI maps the code into its JSON error object.
struct lexi_error : std::runtime_error {
    std::string code;
    lexi_error(std::string code_, const std::string& msg)
        : std::runtime_error(code_ + ": " + msg), code(std::move(code_)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw lexi_error(code, msg);
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

// Reals print with 12 significant digits everywhere (JSON, CSV, logs).
inline std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Round a double to its 12-significant-digit representation so that JSON
// number output (shortest round-trip form) shows exactly the printed value.
inline double round12(double x) {
    return std::strtod(fmt12(x).c_str(), nullptr);
}

inline std::string rat_str(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// Accepts "p/q" (lowest or unreduced terms) or a bare integer.
inline Rat parse_rat(const std::string& text) {
    auto bad = [&]() { fail("ParseError", "not a rational: '" + text + "'"); };
    if (text.empty()) bad();
    std::string::size_type slash = text.find('/');
    auto parse_int = [&](const std::string& part) -> BigInt {
        if (part.empty()) bad();
        std::string::size_type i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') bad();
        return BigInt(part);
    };
    if (slash == std::string::npos) return Rat(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) fail("ParseError", "zero denominator in '" + text + "'");
    return Rat(num, den);
}

inline Rat parse_unit_rat(const std::string& text) {
    Rat q = parse_rat(text);
    if (q < 0 || q > 1) fail("ParseError", "rational out of [0,1]: '" + text + "'");
    return q;
}

}  // namespace lexishift
