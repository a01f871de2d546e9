#include "mstd/experiments.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include <omp.h>

#include "mstd/closed_forms.hpp"
#include "mstd/error.hpp"
#include "mstd/kernels.hpp"

namespace mstd {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void draw_subset(std::uint64_t seed, std::uint64_t trial, std::size_t size, std::span<std::uint64_t> out) noexcept {
    SplitMix64 rng(mix_seed(seed, trial));
    for (std::size_t w = 0; w < out.size(); ++w) {
        std::uint64_t word = rng.next();
        const std::size_t bits_left = size - 64 * w;
        if (bits_left < 64) word &= (std::uint64_t{1} << bits_left) - 1;
        out[w] = word;
    }
}

void ClassCounts::add(Dominance d) noexcept {
    switch (d) {
        case Dominance::SumDominant: ++sum_dominant; break;
        case Dominance::Balanced: ++balanced; break;
        case Dominance::DiffDominant: ++diff_dominant; break;
    }
}

ClassCounts& ClassCounts::operator+=(const ClassCounts& o) noexcept {
    sum_dominant += o.sum_dominant;
    balanced += o.balanced;
    diff_dominant += o.diff_dominant;
    return *this;
}

double SampleReport::fraction(Dominance d) const noexcept {
    if (trials == 0) return 0.0;
    const std::uint64_t c = d == Dominance::SumDominant ? counts.sum_dominant
                            : d == Dominance::Balanced  ? counts.balanced
                                                        : counts.diff_dominant;
    return static_cast<double>(c) / static_cast<double>(trials);
}

namespace {

int thread_count(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

void require_trials(std::uint64_t trials) {
    if (trials == 0) throw Error(ErrorKind::InvalidParameter, "trials must be >= 1");
}

std::size_t census_limit(const CensusOptions& options) {
    return options.force ? kCensusForcedMaxOrder : kCensusMaxOrder;
}

void require_census_size(const FiniteGroup& group, const CensusOptions& options) {
    if (group.order() > census_limit(options))
        throw Error(ErrorKind::CensusTooLarge,
                    group.name() + " has 2^" + std::to_string(group.order()) +
                        " subsets; use sampling instead (or --force up to order " +
                        std::to_string(kCensusForcedMaxOrder) + ")");
}

SampleReport make_sample_report(std::string universe, std::size_t order, std::uint64_t trials, std::uint64_t seed) {
    SampleReport r;
    r.universe = std::move(universe);
    r.order = order;
    r.trials = trials;
    r.seed = seed;
    return r;
}

}  // namespace

SampleReport monte_carlo_group(const FiniteGroup& group, std::uint64_t trials, std::uint64_t seed, int workers) {
    require_trials(trials);
    auto report = make_sample_report(group.descriptor().to_string() == "custom" ? group.name()
                                                                                 : group.descriptor().to_string(),
                                     group.order(), trials, seed);
    const std::size_t n = group.order();
    const std::size_t words = (n + 63) / 64;
    const bool small = n <= 64;
    const std::optional<kernel::SmallGroupKernel> kern =
        small ? std::optional<kernel::SmallGroupKernel>(group) : std::nullopt;

    std::uint64_t sum_dom = 0, balanced = 0, diff_dom = 0, both_full = 0;
#pragma omp parallel num_threads(thread_count(workers)) reduction(+ : sum_dom, balanced, diff_dom, both_full)
    {
        std::vector<std::uint64_t> s(words);
#pragma omp for schedule(static)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
            draw_subset(seed, static_cast<std::uint64_t>(t), n, s);
            const SetSizes sz = small ? kern->sizes(s[0]) : kernel::reference_sizes(group, s);
            if (sz.sum > sz.diff) ++sum_dom;
            else if (sz.sum < sz.diff) ++diff_dom;
            else ++balanced;
            if (sz.sum == n && sz.diff == n) ++both_full;
        }
    }
    report.counts = {sum_dom, balanced, diff_dom};
    report.both_full = both_full;
    return report;
}

CensusReport census(const FiniteGroup& group, const CensusOptions& options) {
    require_census_size(group, options);
    const std::size_t n = group.order();
    const kernel::SmallGroupKernel kern(group);
    const std::uint64_t total = std::uint64_t{1} << n;
    // Fixed chunking keeps witness selection independent of the thread count.
    const std::uint64_t chunk_count = std::min<std::uint64_t>(total, 4096);
    const std::uint64_t chunk_size = total / chunk_count;

    std::vector<ClassCounts> chunk_counts(chunk_count);
    std::vector<std::vector<std::uint64_t>> chunk_witnesses(chunk_count);

#pragma omp parallel for num_threads(thread_count(options.workers)) schedule(dynamic)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunk_count); ++c) {
        ClassCounts local;
        auto& witnesses = chunk_witnesses[static_cast<std::size_t>(c)];
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk_size;
        for (std::uint64_t m = begin; m < begin + chunk_size; ++m) {
            const auto sz = kern.sizes(m);
            const auto d = dominance_of(sz.sum, sz.diff);
            local.add(d);
            if (d == Dominance::SumDominant && witnesses.size() < options.witness_limit) witnesses.push_back(m);
        }
        chunk_counts[static_cast<std::size_t>(c)] = local;
    }

    CensusReport report{group.descriptor().kind == GroupKind::Custom ? group.name() : group.descriptor().to_string(),
                        n, total, {}, {}};
    for (std::uint64_t c = 0; c < chunk_count; ++c) {
        report.counts += chunk_counts[c];
        for (auto m : chunk_witnesses[c]) {
            if (report.sum_dominant_examples.size() >= options.witness_limit) break;
            report.sum_dominant_examples.push_back(m);
        }
    }
    return report;
}

SampleReport interval_monte_carlo(std::size_t n, std::uint64_t trials, std::uint64_t seed, int workers) {
    require_trials(trials);
    auto report = make_sample_report("interval:" + std::to_string(n), n + 1, trials, seed);
    const std::size_t words = (n + 1 + 63) / 64;
    std::uint64_t sum_dom = 0, balanced = 0, diff_dom = 0;
#pragma omp parallel num_threads(thread_count(workers)) reduction(+ : sum_dom, balanced, diff_dom)
    {
        std::vector<std::uint64_t> s(words);
#pragma omp for schedule(static)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
            draw_subset(seed, static_cast<std::uint64_t>(t), n + 1, s);
            const auto sz = kernel::interval_sizes_shift(n, s);
            if (sz.sum > sz.diff) ++sum_dom;
            else if (sz.sum < sz.diff) ++diff_dom;
            else ++balanced;
        }
    }
    report.counts = {sum_dom, balanced, diff_dom};
    return report;
}

SampleReport half_interval_monte_carlo(std::size_t n, std::uint64_t trials, std::uint64_t seed, int workers) {
    require_trials(trials);
    const auto group = make_cyclic(n + 1);
    const std::size_t half = n / 2 + 1;  // {0..floor(n/2)}
    auto report = make_sample_report("half-interval:" + std::to_string(n) + "/" + group.descriptor().to_string(),
                                     group.order(), trials, seed);
    const std::size_t words = (group.order() + 63) / 64;
    std::uint64_t sum_dom = 0, balanced = 0, diff_dom = 0, both_full = 0;
#pragma omp parallel num_threads(thread_count(workers)) reduction(+ : sum_dom, balanced, diff_dom, both_full)
    {
        std::vector<std::uint64_t> s(words, 0);
#pragma omp for schedule(static)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
            std::fill(s.begin(), s.end(), 0);
            draw_subset(seed, static_cast<std::uint64_t>(t), half, std::span(s).first((half + 63) / 64));
            const auto sz = kernel::reference_sizes(group, s);
            if (sz.sum > sz.diff) ++sum_dom;
            else if (sz.sum < sz.diff) ++diff_dom;
            else ++balanced;
            if (sz.sum == group.order() && sz.diff == group.order()) ++both_full;
        }
    }
    report.counts = {sum_dom, balanced, diff_dom};
    report.both_full = both_full;
    return report;
}

namespace reference {

SampleReport monte_carlo_group(const FiniteGroup& group, std::uint64_t trials, std::uint64_t seed) {
    require_trials(trials);
    auto report = make_sample_report(group.descriptor().to_string() == "custom" ? group.name()
                                                                                 : group.descriptor().to_string(),
                                     group.order(), trials, seed);
    const std::size_t n = group.order();
    std::vector<std::uint64_t> s((n + 63) / 64);
    for (std::uint64_t t = 0; t < trials; ++t) {
        draw_subset(seed, t, n, s);
        const auto sz = kernel::reference_sizes(group, s);
        report.counts.add(dominance_of(sz.sum, sz.diff));
        if (sz.sum == n && sz.diff == n) ++report.both_full;
    }
    return report;
}

CensusReport census(const FiniteGroup& group, const CensusOptions& options) {
    require_census_size(group, options);
    const std::size_t n = group.order();
    CensusReport report{group.descriptor().kind == GroupKind::Custom ? group.name() : group.descriptor().to_string(),
                        n, std::uint64_t{1} << n, {}, {}};
    std::uint64_t word = 0;
    for (std::uint64_t m = 0; m < report.total; ++m) {
        word = m;
        const auto sz = kernel::reference_sizes(group, std::span<const std::uint64_t>(&word, 1));
        const auto d = dominance_of(sz.sum, sz.diff);
        report.counts.add(d);
        if (d == Dominance::SumDominant && report.sum_dominant_examples.size() < options.witness_limit)
            report.sum_dominant_examples.push_back(m);
    }
    return report;
}

SampleReport interval_monte_carlo(std::size_t n, std::uint64_t trials, std::uint64_t seed) {
    require_trials(trials);
    auto report = make_sample_report("interval:" + std::to_string(n), n + 1, trials, seed);
    std::vector<std::uint64_t> s((n + 1 + 63) / 64);
    std::vector<std::uint64_t> sum((2 * n + 1 + 63) / 64), diff(sum.size());
    for (std::uint64_t t = 0; t < trials; ++t) {
        draw_subset(seed, t, n + 1, s);
        std::fill(sum.begin(), sum.end(), 0);
        std::fill(diff.begin(), diff.end(), 0);
        const auto a = kernel::interval_sum_reference(n, s, sum);
        const auto b = kernel::interval_diff_reference(n, s, diff);
        report.counts.add(dominance_of(a, b));
    }
    return report;
}

}  // namespace reference

std::vector<SampleReport> sweep_cyclic(std::size_t n_from, std::size_t n_to, std::uint64_t trials, std::uint64_t seed,
                                       int workers) {
    if (n_from < 1 || n_from > n_to) throw Error(ErrorKind::InvalidParameter, "sweep needs 1 <= from <= to");
    std::vector<SampleReport> rows;
    for (std::size_t n = n_from; n <= n_to; ++n) {
        auto row = monte_carlo_group(make_cyclic(n), trials, mix_seed(seed, n), workers);
        row.seed = seed;  // rows record the sweep seed; the per-n seed is derived from it
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CensusReport> census_dihedral_sweep(std::size_t max_order, int workers) {
    if (max_order > kCensusMaxOrder)
        throw Error(ErrorKind::CensusTooLarge, "dihedral census sweep is capped at order " + std::to_string(kCensusMaxOrder));
    std::vector<CensusReport> rows;
    for (std::size_t n = 3; 2 * n <= max_order; ++n) rows.push_back(census(make_dihedral(n), {.workers = workers}));
    return rows;
}

bool VerificationReport::all_pass() const noexcept { return failures() == 0; }

std::size_t VerificationReport::failures() const noexcept {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return !c.pass; }));
}

std::vector<FiniteGroup> verification_groups(std::size_t max_order) {
    if (max_order > kOracleMaxOrder)
        throw Error(ErrorKind::OracleCapExceeded, "verify is limited to order " + std::to_string(kOracleMaxOrder));
    std::vector<FiniteGroup> groups;
    for (std::size_t n = 1; n <= max_order; ++n) groups.push_back(make_cyclic(n));
    for (std::size_t n = 1; 2 * n <= max_order; ++n) groups.push_back(make_dihedral(n));
    if (max_order >= 4) groups.push_back(catalog::klein_four());
    if (max_order >= 8) groups.push_back(catalog::quaternion());
    return groups;
}

VerificationReport verify_suite(std::size_t max_order, int workers) {
    VerificationReport report;
    for (const auto& group : verification_groups(max_order)) {
        const auto order = static_cast<std::uint32_t>(group.order());
        for (Mode mode : {Mode::Sum, Mode::Diff}) {
            const auto oracle = brute_miss_counts(group, mode, workers);
            for (std::uint32_t g = 0; g < order; ++g) {
                const BigInt formula = miss_count(group, {g}, mode);
                report.cases.push_back({group.name(), group.label({g}), mode, "oracle", formula.str(),
                                        std::to_string(oracle[g]), formula == oracle[g]});
                if (group.descriptor().kind == GroupKind::Cyclic) {
                    const Rational closed = mode == Mode::Sum ? cyclic_sum_miss(order, g) : cyclic_diff_miss(order, g);
                    const Rational scaled = closed * Rational(BigInt(1) << order);
                    const bool integral = denominator(scaled) == 1;
                    report.cases.push_back({group.name(), group.label({g}), mode, "closed-form",
                                            integral ? numerator(scaled).str() : to_string(scaled), formula.str(),
                                            integral && numerator(scaled) == formula});
                }
            }
        }
    }
    return report;
}

}  // namespace mstd
