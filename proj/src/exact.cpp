#include "mstd/exact.hpp"

#include <cmath>

#include "mstd/chain_probability.hpp"

namespace mstd {

BigInt pow_big(std::uint64_t base, std::uint64_t exponent) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

Rational ExactProbability::to_rational() const {
    return Rational(count, BigInt(1) << log2_denominator);
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

double ExactProbability::to_double() const { return mstd::to_double(to_rational()); }

std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string ExactProbability::to_string() const { return mstd::to_string(to_rational()); }

double Envelope::to_double() const {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return mstd::to_double(coefficient) * std::pow(0.75, three_quarters_halves / 2.0) *
           std::pow(phi / 2.0, static_cast<double>(golden_half));
}

bool Envelope::holds(const Rational& p) const {
    if (p <= 0) return true;
    if (coefficient <= 0) return false;
    // p <= c (3/4)^(a/2) (phi/2)^b
    // <=> q := p 2^b / c <= (3/4)^(a/2) phi^b, with phi^b = (L + F sqrt5)/2
    // <=> q^2 <= (3/4)^a (L^2 + 5F^2 + 2LF sqrt5) / 4 = s + t sqrt5
    const Rational q = p * Rational(BigInt(1) << golden_half) / coefficient;
    const Rational quarter_pow(pow_big(3, three_quarters_halves), BigInt(1) << (2 * three_quarters_halves));
    const BigInt l = lucas(golden_half), f = fibonacci(golden_half);
    const Rational s = quarter_pow * Rational(l * l + 5 * f * f) / 4;
    const Rational t = quarter_pow * Rational(2 * l * f) / 4;
    const Rational lhs = q * q - s;
    if (lhs <= 0) return true;
    return lhs * lhs <= 5 * t * t;
}

}  // namespace mstd
