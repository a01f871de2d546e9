#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mstd/exact.hpp"
#include "mstd/group.hpp"

namespace mstd {

enum class Mode { Sum, Diff };

std::string_view to_string(Mode mode) noexcept;
Mode parse_mode(std::string_view text);

BigInt lucas(std::uint32_t m);
BigInt fibonacci(std::uint32_t m);

/// Red/blue colorings of m vertices on a path with no two adjacent reds: F(m+2).
BigInt line_colorings(std::uint32_t m);
/// Same on an m-cycle: L(m). A 1-cycle is self-adjacent (must be blue), so 1.
BigInt cycle_colorings(std::uint32_t m);

/// The chains X_i for a target g: cycles of a permutation of the group.
///   sum:  x ↦ x⁻¹∘g, each consecutive pair composes to g; fixed points solve x∘x = g.
///   diff: x ↦ g⁻¹∘x, all cycles have length order_of(g).
struct ChainDecomposition {
    Element target;
    Mode mode = Mode::Sum;
    /// Each chain in traversal order, starting from its smallest index.
    std::vector<std::vector<std::uint32_t>> chains;

    /// Sorted ascending.
    std::vector<std::uint32_t> cycle_lengths() const;
};

ChainDecomposition sum_chains(const FiniteGroup& group, Element g);
ChainDecomposition diff_chains(const FiniteGroup& group, Element g);
ChainDecomposition chains(const FiniteGroup& group, Element g, Mode mode);

/// Number of S ⊆ G with g ∉ S+S (or S-S): ∏ L(|X_i|).
BigInt miss_count(const FiniteGroup& group, Element g, Mode mode);
ExactProbability miss_probability(const FiniteGroup& group, Element g, Mode mode);

/// Σ_g P(g ∉ S+S) capped at 1: upper bound on P(S+S ≠ G).
Rational union_bound_not_full(const FiniteGroup& group, Mode mode);
/// The same sum without the cap.
Rational union_bound_raw(const FiniteGroup& group, Mode mode);

inline constexpr std::size_t kOracleMaxOrder = 24;

/// Brute-force oracle: enumerates all 2^|G| subsets, computes each sumset or
/// difference set directly, and tallies which elements are missed.
/// Returns one count per element. Parallel over the mask range.
std::vector<std::uint64_t> brute_miss_counts(const FiniteGroup& group, Mode mode, int workers = 0);
std::uint64_t brute_miss_count(const FiniteGroup& group, Element g, Mode mode);

}  // namespace mstd
