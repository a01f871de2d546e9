#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mstd/group.hpp"

namespace mstd {

enum class UniverseKind { Group, Interval };

/// What a mask indexes: the elements of one group (tag = table fingerprint),
/// or the integers 0..tag of an interval.
struct Universe {
    UniverseKind kind = UniverseKind::Group;
    std::size_t size = 0;
    std::uint64_t tag = 0;

    static Universe of(const FiniteGroup& group) {
        return {UniverseKind::Group, group.order(), group.fingerprint()};
    }
    static Universe interval(std::size_t n) { return {UniverseKind::Interval, n + 1, n}; }

    friend bool operator==(const Universe&, const Universe&) = default;
};

/// Membership bitmask over the indices 0..universe.size-1.
class SubsetMask {
public:
    explicit SubsetMask(Universe universe);

    static SubsetMask empty(const FiniteGroup& group) { return SubsetMask(Universe::of(group)); }
    static SubsetMask full(const FiniteGroup& group);
    static SubsetMask of(const FiniteGroup& group, std::span<const std::uint32_t> indices);
    /// Low `group.order()` bits of `bits`; requires order <= 64.
    static SubsetMask from_bits(const FiniteGroup& group, std::uint64_t bits);
    /// S ⊆ {0..n}.
    static SubsetMask interval(std::size_t n, std::span<const std::uint32_t> values);

    const Universe& universe() const noexcept { return universe_; }
    std::size_t universe_size() const noexcept { return universe_.size; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool contains(std::size_t i) const noexcept {
        return i < universe_.size && (words_[i / 64] >> (i % 64)) & 1u;
    }
    void insert(std::size_t i);
    std::size_t count() const noexcept;
    bool empty() const noexcept { return count() == 0; }
    std::vector<std::uint32_t> elements() const;
    /// Low 64 bits; the whole mask when the universe has <= 64 elements.
    std::uint64_t low_bits() const noexcept { return words_.empty() ? 0 : words_[0]; }

    bool is_subset_of(const SubsetMask& other) const;
    SubsetMask operator|(const SubsetMask& other) const;

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

private:
    Universe universe_;
    std::vector<std::uint64_t> words_;
};

enum class Dominance { SumDominant, Balanced, DiffDominant };

std::string_view to_string(Dominance d) noexcept;

struct Classification {
    Dominance label = Dominance::Balanced;
    std::size_t sumset_size = 0;
    std::size_t diffset_size = 0;
};

inline Dominance dominance_of(std::size_t sum_size, std::size_t diff_size) noexcept {
    if (sum_size > diff_size) return Dominance::SumDominant;
    if (sum_size < diff_size) return Dominance::DiffDominant;
    return Dominance::Balanced;
}

/// {x∘y : x, y ∈ S} over ordered pairs.
SubsetMask sumset(const FiniteGroup& group, const SubsetMask& s);
/// {x∘y⁻¹ : x, y ∈ S}.
SubsetMask diffset(const FiniteGroup& group, const SubsetMask& s);
SubsetMask pair_sumset(const FiniteGroup& group, const SubsetMask& a, const SubsetMask& b);
SubsetMask pair_diffset(const FiniteGroup& group, const SubsetMask& a, const SubsetMask& b);
Classification classify(const FiniteGroup& group, const SubsetMask& s);

/// Sumset of S ⊆ {0..n}: a mask over {0..2n}.
SubsetMask interval_sumset(std::size_t n, const SubsetMask& s);
/// Difference set of S ⊆ {0..n}, value d stored at index d + n (mask over {0..2n}).
SubsetMask interval_diffset(std::size_t n, const SubsetMask& s);
Classification interval_classify(std::size_t n, const SubsetMask& s);

/// S = R ∪ F split into rotations and reflections of a dihedral group, with
/// each sum/difference component computed separately from R and F.
struct DihedralDecomposition {
    SubsetMask rotations;
    SubsetMask reflections;
    SubsetMask r_plus_r;
    SubsetMask f_plus_f;
    SubsetMask r_plus_f;
    SubsetMask neg_r_plus_f;
    SubsetMask r_minus_r;
    SubsetMask f_minus_f;
    SubsetMask r_minus_f;
    SubsetMask f_minus_r;

    SubsetMask sumset_rotation_part() const { return r_plus_r | f_plus_f; }
    SubsetMask sumset_reflection_part() const { return r_plus_f | neg_r_plus_f; }
    SubsetMask diffset_rotation_part() const { return r_minus_r | f_minus_f; }
    SubsetMask diffset_reflection_part() const { return r_minus_f | f_minus_r; }
};

DihedralDecomposition dihedral_decompose(const FiniteGroup& group, const SubsetMask& s);

/// Keeps only indices < `limit` (used to split a dihedral mask into rotations)
/// or >= `limit` when `keep_high` is set.
SubsetMask restrict_mask(const SubsetMask& s, std::size_t limit, bool keep_high);

}  // namespace mstd
