#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mstd {

/// Index of an element, meaningful only relative to one FiniteGroup.
struct Element {
    std::uint32_t index = 0;

    friend bool operator==(Element, Element) = default;
};

enum class GroupKind { Cyclic, Dihedral, Custom };

/// cyclic(n), dihedral(n) (order 2n) or custom.
struct GroupDescriptor {
    GroupKind kind = GroupKind::Custom;
    std::uint32_t parameter = 0;

    std::string to_string() const;
    static GroupDescriptor parse(const std::string& text);

    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

inline constexpr std::size_t kMaxGroupOrder = 4096;

/// A finite group stored as its Cayley table. Immutable once constructed.
///
/// `compose(x, y)` is x∘y with the left operand first. Dihedral groups place
/// rotations a^i at indices 0..n-1 and reflections a^i b at n+i.
class FiniteGroup {
public:
    std::size_t order() const noexcept { return order_; }
    Element identity() const noexcept { return {identity_}; }
    const GroupDescriptor& descriptor() const noexcept { return descriptor_; }
    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(Element x) const;

    /// Row-major n*n table; entry [x*n + y] is x∘y.
    std::span<const std::uint32_t> table() const noexcept { return table_; }
    std::span<const std::uint32_t> inverses() const noexcept { return inverse_; }

    /// Unchecked table lookups for inner loops.
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept { return table_[x * order_ + y]; }
    std::uint32_t inv(std::uint32_t x) const noexcept { return inverse_[x]; }

    Element compose(Element x, Element y) const;
    Element inverse_of(Element x) const;
    std::uint32_t order_of(Element x) const;

    /// Looks up an element by label, falling back to a decimal index.
    Element parse_element(const std::string& text) const;

    bool is_abelian() const noexcept;

    /// Hash of the Cayley table; used to reject masks from a different universe.
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    friend FiniteGroup make_cyclic(std::size_t n);
    friend FiniteGroup make_dihedral(std::size_t n);
    friend FiniteGroup from_table(const std::vector<std::vector<std::uint32_t>>& rows,
                                  std::optional<std::vector<std::string>> labels,
                                  std::string name,
                                  bool validate_associativity);

private:
    FiniteGroup() = default;
    void check(Element x) const;
    void finalize();

    std::size_t order_ = 0;
    std::uint32_t identity_ = 0;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::string> labels_;
    GroupDescriptor descriptor_;
    std::string name_;
    std::uint64_t fingerprint_ = 0;
};

FiniteGroup make_cyclic(std::size_t n);
FiniteGroup make_dihedral(std::size_t n);

/// Validates a user table: Latin square, identity, inverses and (optionally,
/// O(n^3)) associativity. Throws Error(NotAGroup) naming the failed axiom.
FiniteGroup from_table(const std::vector<std::vector<std::uint32_t>>& rows,
                       std::optional<std::vector<std::string>> labels = std::nullopt,
                       std::string name = "custom",
                       bool validate_associativity = true);

/// Checks all four group axioms on an already built group (tests use this on
/// the built-in constructors, which skip validation).
void validate_group_axioms(const FiniteGroup& group);

namespace catalog {

FiniteGroup klein_four();
/// Q8 with elements 1, i, j, k, -1, -i, -j, -k in that index order.
FiniteGroup quaternion();

}  // namespace catalog

}  // namespace mstd
