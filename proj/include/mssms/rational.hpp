#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mssms {

// Exact arithmetic everywhere: distances, work-function values, LP entries.
// Equality tests (support membership, LP residuals) are exact by construction.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

// Canonical "p" / "p/q" form, q > 0.
inline std::string rat_to_string(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) {
        s += '/';
        s += denominator(x).str();
    }
    return s;
}

// Accepts "p", "p/q", and plain decimals ("2.5", "-0.125"); decimals convert exactly.
inline Rat parse_rational(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("bad rational: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        if (slash == 0 || slash + 1 == text.size()) bad();
        BigInt num, den;
        try {
            num = BigInt(std::string(text.substr(0, slash)));
            den = BigInt(std::string(text.substr(slash + 1)));
        } catch (const std::exception&) {
            bad();
        }
        if (den == 0) bad();
        return Rat(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string digits(text.substr(0, dot));
        std::string frac(text.substr(dot + 1));
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) bad();
        bool neg = !digits.empty() && digits[0] == '-';
        BigInt num;
        try {
            num = BigInt(digits.empty() || digits == "-" ? std::string("0") : digits);
        } catch (const std::exception&) {
            bad();
        }
        BigInt den = 1;
        for (char c : frac) {
            num = num * 10 + (neg ? -(c - '0') : (c - '0'));
            den *= 10;
        }
        return Rat(num, den);
    }
    try {
        return Rat(BigInt(std::string(text)));
    } catch (const std::exception&) {
        bad();
    }
    return Rat();  // unreachable
}

inline BigInt binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigInt out = 1;
    for (int i = 1; i <= r; ++i) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

}  // namespace mssms
