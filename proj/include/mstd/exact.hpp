#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mstd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt pow_big(std::uint64_t base, std::uint64_t exponent);

/// count / 2^log2_denominator, kept exact. Floating values are views only.
struct ExactProbability {
    BigInt count;
    std::uint32_t log2_denominator = 0;

    Rational to_rational() const;
    double to_double() const;
    /// Reduced "p/q" text.
    std::string to_string() const;

    friend bool operator==(const ExactProbability& a, const ExactProbability& b) {
        return a.to_rational() == b.to_rational();
    }
};

std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// An analytic bound of the form
///     coefficient * (3/4)^(three_quarters_halves / 2) * (phi/2)^golden_half
/// where phi is the golden ratio. Every bound in the closed forms fits this
/// shape: (sqrt(3)/2)^m is (3/4)^(m/2), and (1.8/2)^m is a rational coefficient.
///
/// `holds` decides p <= bound exactly by squaring and writing phi^b as
/// (L(b) + F(b) sqrt5) / 2, so equality cases never flip on rounding.
struct Envelope {
    Rational coefficient{1};
    std::uint32_t three_quarters_halves = 0;
    std::uint32_t golden_half = 0;

    double to_double() const;
    bool holds(const Rational& p) const;
    bool holds(const ExactProbability& p) const { return holds(p.to_rational()); }
};

}  // namespace mstd
