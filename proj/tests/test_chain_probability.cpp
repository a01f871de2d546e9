#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "mstd/chain_probability.hpp"
#include "mstd/error.hpp"
#include "mstd/experiments.hpp"
#include "mstd/kernels.hpp"

using namespace mstd;

namespace {

using Lengths = std::vector<std::uint32_t>;

// Colorings of m path vertices with no two adjacent reds, by enumeration.
std::uint64_t brute_line(std::uint32_t m) {
    std::uint64_t c = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) c += (s & (s >> 1)) == 0;
    return c;
}

// Same on a ring; for m = 1 the vertex neighbours itself.
std::uint64_t brute_ring(std::uint32_t m) {
    std::uint64_t c = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        bool ok = true;
        for (std::uint32_t i = 0; i < m && ok; ++i) ok = !((s >> i) & 1 && (s >> ((i + 1) % m)) & 1);
        c += ok;
    }
    return c;
}

std::vector<FiniteGroup> small_suite() {
    std::vector<FiniteGroup> gs;
    for (std::size_t n = 1; n <= 12; ++n) gs.push_back(make_cyclic(n));
    for (std::size_t n = 1; n <= 8; ++n) gs.push_back(make_dihedral(n));
    gs.push_back(catalog::klein_four());
    gs.push_back(catalog::quaternion());
    return gs;
}

FiniteGroup elementary_abelian_8() {
    std::vector<std::vector<std::uint32_t>> rows(8, std::vector<std::uint32_t>(8));
    for (std::uint32_t x = 0; x < 8; ++x)
        for (std::uint32_t y = 0; y < 8; ++y) rows[x][y] = x ^ y;
    return from_table(rows, std::nullopt, "Z2^3");
}

}  // namespace

TEST_CASE("Lucas and Fibonacci numbers") {
    CHECK(lucas(0) == 2);
    CHECK(lucas(1) == 1);
    CHECK(lucas(4) == 7);
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(10) == 55);
    for (std::uint32_t m = 1; m <= 64; ++m) CHECK(lucas(m) == fibonacci(m + 1) + fibonacci(m - 1));
    CHECK(lucas(64).str() == "23725150497407");
}

TEST_CASE("line and cycle colorings") {
    CHECK(line_colorings(1) == 2);
    CHECK(line_colorings(2) == 3);
    CHECK(line_colorings(3) == 5);
    CHECK(cycle_colorings(1) == 1);
    CHECK(cycle_colorings(2) == 3);
    CHECK(cycle_colorings(4) == 7);
    for (std::uint32_t m = 4; m <= 64; ++m)
        CHECK(cycle_colorings(m) == line_colorings(m - 1) + line_colorings(m - 3));
    for (std::uint32_t m = 1; m <= 20; ++m) {
        CAPTURE(m);
        CHECK(line_colorings(m) == brute_line(m));
        CHECK(cycle_colorings(m) == brute_ring(m));
    }
}

TEST_CASE("sum chains") {
    auto d6 = make_dihedral(3);
    auto dec = sum_chains(d6, d6.parse_element("ab"));
    CHECK(dec.cycle_lengths() == Lengths{2, 4});
    // {ab, e} and {a2, a2b, a, b}
    std::vector<std::vector<std::uint32_t>> sorted_chains;
    for (auto c : dec.chains) {
        std::sort(c.begin(), c.end());
        sorted_chains.push_back(c);
    }
    CHECK(std::find(sorted_chains.begin(), sorted_chains.end(), std::vector<std::uint32_t>{0, 4}) != sorted_chains.end());
    CHECK(std::find(sorted_chains.begin(), sorted_chains.end(), std::vector<std::uint32_t>{1, 2, 3, 5}) !=
          sorted_chains.end());

    auto z4 = make_cyclic(4);
    CHECK(sum_chains(z4, {0}).cycle_lengths() == Lengths{1, 1, 2});
    CHECK(sum_chains(z4, {1}).cycle_lengths() == Lengths{2, 2});
    CHECK_THROWS_AS(sum_chains(z4, {4}), Error);
}

TEST_CASE("difference chains") {
    auto z6 = make_cyclic(6);
    auto dec = diff_chains(z6, {2});
    CHECK(dec.cycle_lengths() == Lengths{3, 3});
    CHECK(dec.chains[0] == std::vector<std::uint32_t>{0, 4, 2});
    CHECK(dec.chains[1] == std::vector<std::uint32_t>{1, 5, 3});

    for (const auto& g : small_suite())
        CHECK(diff_chains(g, g.identity()).cycle_lengths() == Lengths(g.order(), 1));

    for (std::uint32_t n = 1; n <= 30; ++n) {
        auto z = make_cyclic(n);
        for (std::uint32_t k = 0; k < n; ++k) {
            const std::uint32_t d = std::gcd(n, k);
            CHECK(diff_chains(z, {k}).cycle_lengths() == Lengths(d, n / d));
        }
    }
}

TEST_CASE("chain decomposition invariants") {
    auto groups = small_suite();
    groups.push_back(elementary_abelian_8());
    for (const auto& g : groups) {
        CAPTURE(g.name());
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            for (Mode mode : {Mode::Sum, Mode::Diff}) {
                auto lengths = chains(g, {x}, mode).cycle_lengths();
                CHECK(std::accumulate(lengths.begin(), lengths.end(), std::size_t{0}) == g.order());
            }
            for (auto len : diff_chains(g, {x}).cycle_lengths()) CHECK(len == g.order_of({x}));
            std::size_t squares = 0;
            for (std::uint32_t y = 0; y < g.order(); ++y) squares += g.mul(y, y) == x;
            auto lengths = sum_chains(g, {x}).cycle_lengths();
            CHECK(static_cast<std::size_t>(std::count(lengths.begin(), lengths.end(), 1u)) == squares);
        }
    }
}

TEST_CASE("groups of exponent 2 have identical sum and difference chains") {
    for (const auto& g : {make_cyclic(2), catalog::klein_four(), elementary_abelian_8(), make_dihedral(1)})
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            auto s = sum_chains(g, {x});
            auto d = diff_chains(g, {x});
            CHECK(s.cycle_lengths() == d.cycle_lengths());
            CHECK(miss_count(g, {x}, Mode::Sum) == miss_count(g, {x}, Mode::Diff));
        }
}

TEST_CASE("miss counts and probabilities") {
    auto d6 = make_dihedral(3);
    CHECK(miss_count(d6, d6.parse_element("ab"), Mode::Sum) == 21);
    auto p = miss_probability(d6, d6.parse_element("ab"), Mode::Sum);
    CHECK(p.count == 21);
    CHECK(p.log2_denominator == 6);
    CHECK(p.to_string() == "21/64");
    CHECK(p.to_double() == doctest::Approx(0.328125));

    auto z4 = make_cyclic(4);
    CHECK(miss_count(z4, {0}, Mode::Sum) == 3);  // ∅, {1}, {3}
    CHECK(miss_probability(z4, {1}, Mode::Sum).to_string() == "9/16");
    CHECK(miss_probability(make_cyclic(6), {2}, Mode::Diff).to_string() == "1/4");

    for (const auto& g : small_suite()) {
        CHECK(miss_count(g, g.identity(), Mode::Diff) == 1);
        CHECK(miss_probability(g, g.identity(), Mode::Diff).to_rational() == Rational(1, BigInt(1) << g.order()));
    }
}

TEST_CASE("miss counts respect the sqrt(3) envelope") {
    for (const auto& g : small_suite())
        for (std::uint32_t x = 0; x < g.order(); ++x)
            for (Mode mode : {Mode::Sum, Mode::Diff}) {
                const BigInt c = miss_count(g, {x}, mode);
                CHECK(c * c <= pow_big(3, g.order()));
            }
    for (std::uint32_t m = 1; m <= 64; ++m) {
        const BigInt l = lucas(m);
        CHECK(l * l <= pow_big(3, m));
        CHECK(l * pow_big(5, m) <= pow_big(9, m));  // L(m) <= 1.8^m
    }
}

TEST_CASE("brute-force oracle: frozen values") {
    // Frozen from tests/oracles/brute_force.py.
    auto d6 = make_dihedral(3);
    CHECK(brute_miss_counts(d6, Mode::Sum) == std::vector<std::uint64_t>{3, 12, 12, 21, 21, 21});
    CHECK(brute_miss_counts(d6, Mode::Diff) == std::vector<std::uint64_t>{1, 16, 16, 27, 27, 27});
    CHECK(brute_miss_counts(make_cyclic(4), Mode::Sum) == std::vector<std::uint64_t>{3, 9, 3, 9});
    CHECK(brute_miss_counts(make_cyclic(6), Mode::Diff) == std::vector<std::uint64_t>{1, 18, 16, 27, 16, 18});
    CHECK(brute_miss_counts(make_dihedral(6), Mode::Sum) ==
          std::vector<std::uint64_t>{9, 486, 144, 729, 144, 486, 441, 441, 441, 441, 441, 441});
    CHECK(brute_miss_count(d6, d6.parse_element("ab"), Mode::Sum) == 21);
}

TEST_CASE("brute-force oracle agrees with the chain formula") {
    for (const auto& g : small_suite()) {
        CAPTURE(g.name());
        for (Mode mode : {Mode::Sum, Mode::Diff}) {
            auto oracle = brute_miss_counts(g, mode);
            for (std::uint32_t x = 0; x < g.order(); ++x) CHECK(miss_count(g, {x}, mode) == oracle[x]);
        }
    }
}

TEST_CASE("brute-force oracle is independent of the worker count") {
    auto g = make_dihedral(7);
    auto one = brute_miss_counts(g, Mode::Sum, 1);
    CHECK(brute_miss_counts(g, Mode::Sum, 2) == one);
    CHECK(brute_miss_counts(g, Mode::Sum, 8) == one);
}

TEST_CASE("brute-force oracle enforces its cap") {
    try {
        brute_miss_counts(make_cyclic(25), Mode::Sum);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OracleCapExceeded);
    }
}

TEST_CASE("union bound") {
    CHECK(union_bound_not_full(make_cyclic(1), Mode::Sum) == Rational(1, 2));
    // Z/20, sum mode: ten elements miss with (1/4)(3/4)^9 and ten with (3/4)^10.
    const Rational z20 = union_bound_raw(make_cyclic(20), Mode::Sum);
    CHECK(z20 == 10 * Rational(pow_big(3, 9), pow_big(4, 10)) + 10 * Rational(pow_big(3, 10), pow_big(4, 10)));
    CHECK(z20 <= 20 * Rational(pow_big(3, 9), pow_big(4, 9)));
    CHECK(union_bound_not_full(make_dihedral(3), Mode::Sum) == Rational(1));  // capped
}

TEST_CASE("sampled frequency of S+S != G stays under the exact union bound") {
    auto g = make_cyclic(16);
    kernel::SmallGroupKernel k(g);
    const std::uint64_t trials = 100000;
    for (Mode mode : {Mode::Sum, Mode::Diff}) {
        std::uint64_t not_full = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            std::uint64_t s = 0;
            draw_subset(42, t, g.order(), std::span<std::uint64_t>(&s, 1));
            const std::uint64_t r = mode == Mode::Sum ? k.sumset(s) : k.diffset(s);
            not_full += r != k.full_mask();
        }
        const double freq = static_cast<double>(not_full) / trials;
        const double bound = to_double(union_bound_not_full(g, mode));
        const double sigma = std::sqrt(bound * (1 - bound) / trials);
        CAPTURE(freq);
        CAPTURE(bound);
        CHECK(freq <= bound + 4 * sigma);
    }
}
