#include "mstd/chain_probability.hpp"

#include <algorithm>
#include <bit>

#include <omp.h>

#include "mstd/error.hpp"
#include "mstd/kernels.hpp"

namespace mstd {

std::string_view to_string(Mode mode) noexcept { return mode == Mode::Sum ? "sum" : "diff"; }

Mode parse_mode(std::string_view text) {
    if (text == "sum") return Mode::Sum;
    if (text == "diff") return Mode::Diff;
    throw Error(ErrorKind::Parse, "mode must be 'sum' or 'diff', got '" + std::string(text) + "'");
}

namespace {

BigInt linear_recurrence(std::uint32_t m, BigInt a, BigInt b) {
    for (std::uint32_t i = 0; i < m; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

ChainDecomposition cycles_of(Element g, Mode mode, const std::vector<std::uint32_t>& permutation) {
    ChainDecomposition out{g, mode, {}};
    std::vector<char> visited(permutation.size(), 0);
    for (std::uint32_t start = 0; start < permutation.size(); ++start) {
        if (visited[start]) continue;
        auto& chain = out.chains.emplace_back();
        for (auto x = start; !visited[x]; x = permutation[x]) {
            visited[x] = 1;
            chain.push_back(x);
        }
    }
    return out;
}

}  // namespace

BigInt lucas(std::uint32_t m) { return linear_recurrence(m, 2, 1); }
BigInt fibonacci(std::uint32_t m) { return linear_recurrence(m, 0, 1); }
BigInt line_colorings(std::uint32_t m) { return fibonacci(m + 2); }
BigInt cycle_colorings(std::uint32_t m) { return lucas(m); }

std::vector<std::uint32_t> ChainDecomposition::cycle_lengths() const {
    std::vector<std::uint32_t> lengths;
    lengths.reserve(chains.size());
    for (const auto& c : chains) lengths.push_back(static_cast<std::uint32_t>(c.size()));
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

ChainDecomposition sum_chains(const FiniteGroup& group, Element g) {
    group.compose(g, g);  // range check
    std::vector<std::uint32_t> tau(group.order());
    for (std::uint32_t x = 0; x < group.order(); ++x) tau[x] = group.mul(group.inv(x), g.index);
    return cycles_of(g, Mode::Sum, tau);
}

ChainDecomposition diff_chains(const FiniteGroup& group, Element g) {
    const auto g_inv = group.inverse_of(g).index;
    std::vector<std::uint32_t> shift(group.order());
    for (std::uint32_t x = 0; x < group.order(); ++x) shift[x] = group.mul(g_inv, x);
    return cycles_of(g, Mode::Diff, shift);
}

ChainDecomposition chains(const FiniteGroup& group, Element g, Mode mode) {
    return mode == Mode::Sum ? sum_chains(group, g) : diff_chains(group, g);
}

BigInt miss_count(const FiniteGroup& group, Element g, Mode mode) {
    BigInt product = 1;
    for (auto length : chains(group, g, mode).cycle_lengths()) product *= cycle_colorings(length);
    return product;
}

ExactProbability miss_probability(const FiniteGroup& group, Element g, Mode mode) {
    return {miss_count(group, g, mode), static_cast<std::uint32_t>(group.order())};
}

Rational union_bound_raw(const FiniteGroup& group, Mode mode) {
    BigInt total = 0;
    for (std::uint32_t g = 0; g < group.order(); ++g) total += miss_count(group, {g}, mode);
    return Rational(total, BigInt(1) << group.order());
}

Rational union_bound_not_full(const FiniteGroup& group, Mode mode) {
    return std::min(union_bound_raw(group, mode), Rational(1));
}

std::vector<std::uint64_t> brute_miss_counts(const FiniteGroup& group, Mode mode, int workers) {
    const std::size_t n = group.order();
    if (n > kOracleMaxOrder)
        throw Error(ErrorKind::OracleCapExceeded,
                    "brute-force oracle limited to order " + std::to_string(kOracleMaxOrder) + ", got " + std::to_string(n));
    const kernel::SmallGroupKernel kern(group);
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::uint64_t> counts(n, 0);
    const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel num_threads(threads)
    {
        std::vector<std::uint64_t> local(n, 0);
#pragma omp for schedule(static)
        for (std::int64_t m = 0; m < static_cast<std::int64_t>(total); ++m) {
            const auto s = static_cast<std::uint64_t>(m);
            const std::uint64_t hit = mode == Mode::Sum ? kern.sumset(s) : kern.diffset(s);
            for (auto missed = ~hit & kern.full_mask(); missed != 0; missed &= missed - 1)
                ++local[static_cast<std::size_t>(std::countr_zero(missed))];
        }
#pragma omp critical
        for (std::size_t g = 0; g < n; ++g) counts[g] += local[g];
    }
    return counts;
}

std::uint64_t brute_miss_count(const FiniteGroup& group, Element g, Mode mode) {
    group.inverse_of(g);
    return brute_miss_counts(group, mode)[g.index];
}

}  // namespace mstd
