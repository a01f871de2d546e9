#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mstd/chain_probability.hpp"
#include "mstd/group.hpp"
#include "mstd/set_algebra.hpp"

namespace mstd {

inline constexpr std::string_view kRngId = "splitmix64-per-trial-v1";
inline constexpr std::uint64_t kDefaultSeed = 20121001;
inline constexpr std::size_t kCensusMaxOrder = 30;
inline constexpr std::size_t kCensusForcedMaxOrder = 48;
inline constexpr std::size_t kWitnessLimit = 32;

/// splitmix64 finalizer applied to seed + golden * (stream + 1). Derives the
/// per-n seed of a sweep and the per-trial generator seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}
    std::uint64_t next() noexcept;

private:
    std::uint64_t state_;
};

/// Uniform subset of a universe of `size` elements, one fair bit per element,
/// drawn from the generator of trial `trial`. `out` holds ceil(size/64) words.
void draw_subset(std::uint64_t seed, std::uint64_t trial, std::size_t size, std::span<std::uint64_t> out) noexcept;

struct ClassCounts {
    std::uint64_t sum_dominant = 0;
    std::uint64_t balanced = 0;
    std::uint64_t diff_dominant = 0;

    std::uint64_t total() const noexcept { return sum_dominant + balanced + diff_dominant; }
    void add(Dominance d) noexcept;
    ClassCounts& operator+=(const ClassCounts& o) noexcept;
    friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct SampleReport {
    std::string universe;  // e.g. "cyclic:100", "interval:99"
    std::size_t order = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string rng_id{kRngId};
    ClassCounts counts;
    /// Trials where S+S and S-S are both the whole universe (groups only).
    std::uint64_t both_full = 0;

    double fraction(Dominance d) const noexcept;
    friend bool operator==(const SampleReport&, const SampleReport&) = default;
};

struct CensusReport {
    std::string group;
    std::size_t order = 0;
    std::uint64_t total = 0;
    ClassCounts counts;
    /// Smallest sum-dominant masks, ascending, at most kWitnessLimit.
    std::vector<std::uint64_t> sum_dominant_examples;

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

struct CensusOptions {
    int workers = 0;  // 0: OpenMP default
    bool force = false;
    std::size_t witness_limit = kWitnessLimit;
};

/// OpenMP kernels; results do not depend on the worker count.
SampleReport monte_carlo_group(const FiniteGroup& group, std::uint64_t trials, std::uint64_t seed, int workers = 0);
CensusReport census(const FiniteGroup& group, const CensusOptions& options = {});
SampleReport interval_monte_carlo(std::size_t n, std::uint64_t trials, std::uint64_t seed, int workers = 0);
/// S ⊆ {0..floor(n/2)} classified inside Z/(n+1).
SampleReport half_interval_monte_carlo(std::size_t n, std::uint64_t trials, std::uint64_t seed, int workers = 0);

/// Serial reference versions on the pair-iteration kernels; kept for testing
/// and benchmarking the parallel paths.
namespace reference {
SampleReport monte_carlo_group(const FiniteGroup& group, std::uint64_t trials, std::uint64_t seed);
CensusReport census(const FiniteGroup& group, const CensusOptions& options = {});
SampleReport interval_monte_carlo(std::size_t n, std::uint64_t trials, std::uint64_t seed);
}  // namespace reference

/// One row per n in [n_from, n_to]; row n uses seed mix_seed(seed, n).
std::vector<SampleReport> sweep_cyclic(std::size_t n_from, std::size_t n_to, std::uint64_t trials, std::uint64_t seed,
                                       int workers = 0);
/// Census of every D_2n with 6 <= 2n <= max_order.
std::vector<CensusReport> census_dihedral_sweep(std::size_t max_order, int workers = 0);

struct VerificationCase {
    std::string group;
    std::string element;
    Mode mode = Mode::Sum;
    std::string check;  // "oracle" or "closed-form"
    std::string formula_count;
    std::string oracle_count;
    bool pass = false;
};

struct VerificationReport {
    std::vector<VerificationCase> cases;
    bool all_pass() const noexcept;
    std::size_t failures() const noexcept;
};

/// Chain-formula miss counts against the brute-force oracle over every cyclic
/// and dihedral group and the catalog groups up to `max_order`, all elements,
/// both modes; plus the cyclic closed forms against the chain formula.
VerificationReport verify_suite(std::size_t max_order, int workers = 0);

/// Groups verify_suite runs over.
std::vector<FiniteGroup> verification_groups(std::size_t max_order);

}  // namespace mstd
