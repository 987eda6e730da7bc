#ifndef MINORLIST_RATIONAL_HPP
#define MINORLIST_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace minorlist {

// Exact nonnegative rational, used for eps so floor/ceil arithmetic never
// drifts through doubles.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (d <= 0) throw std::invalid_argument("rational: denominator must be positive");
        if (n < 0) throw std::invalid_argument("rational: negative value");
        long long g = std::gcd(num, den);
        if (g > 1) num /= g, den /= g;
    }

    long long floor_times(long long x) const { return num * x / den; }
    long long ceil_times(long long x) const { return (num * x + den - 1) / den; }

    friend bool operator==(const Rational&, const Rational&) = default;
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

Rational parse_rational(const std::string& text);

}  // namespace minorlist

#endif
