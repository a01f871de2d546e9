#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mstd/group.hpp"

namespace mstd {

struct SetSizes {
    std::size_t sum = 0;
    std::size_t diff = 0;
};

namespace kernel {

/// Reference sumset (or difference set when `difference`): iterate ordered
/// pairs of members, stop once every element is covered. `out` must hold
/// ceil(order/64) zeroed words. Returns the result cardinality.
std::size_t pair_combine(const FiniteGroup& group, std::span<const std::uint64_t> left,
                         std::span<const std::uint64_t> right, bool difference, std::span<std::uint64_t> out);

SetSizes reference_sizes(const FiniteGroup& group, std::span<const std::uint64_t> s);

/// Interval {0..n} kernels; `out` holds ceil((2n+1)/64) zeroed words.
std::size_t interval_sum_reference(std::size_t n, std::span<const std::uint64_t> s, std::span<std::uint64_t> out);
std::size_t interval_diff_reference(std::size_t n, std::span<const std::uint64_t> s, std::span<std::uint64_t> out);

/// Shift-or interval kernel: S+S = ∪_{x∈S} (S << x), S-S+n = ∪_{y∈S} (S << (n-y)).
SetSizes interval_sizes_shift(std::size_t n, std::span<const std::uint64_t> s);

/// Groups of order <= 64 on a single machine word. For each x and each byte
/// lane of the mask, a 256-entry table holds x∘(lane members) (or x∘lane⁻¹),
/// so x∘S costs one lookup per lane. Bit-identical to pair_combine.
class SmallGroupKernel {
public:
    explicit SmallGroupKernel(const FiniteGroup& group);

    std::size_t order() const noexcept { return order_; }
    std::uint64_t full_mask() const noexcept { return full_; }
    std::uint64_t sumset(std::uint64_t s) const noexcept { return combine(sum_table_, s); }
    std::uint64_t diffset(std::uint64_t s) const noexcept { return combine(diff_table_, s); }
    SetSizes sizes(std::uint64_t s) const noexcept;

private:
    std::uint64_t combine(const std::vector<std::uint64_t>& table, std::uint64_t s) const noexcept;

    std::size_t order_ = 0;
    std::size_t lanes_ = 0;
    std::uint64_t full_ = 0;
    std::vector<std::uint64_t> sum_table_;   // [x][lane][byte]
    std::vector<std::uint64_t> diff_table_;
};

}  // namespace kernel

}  // namespace mstd
