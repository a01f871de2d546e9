#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mstd/chain_probability.hpp"
#include "mstd/exact.hpp"
#include "mstd/group.hpp"

namespace mstd {

/// P(k ∉ S+S) in Z/nZ from the parity cases:
///   n even, k even: (1/4)(3/4)^(n/2-1);  n even, k odd: (3/4)^(n/2);  n odd: (1/2)(3/4)^((n-1)/2).
Rational cyclic_sum_miss(std::uint32_t n, std::uint32_t k);
/// P(k ∉ S1+S2) and P(k ∉ S1-S2) for independent S1, S2: (3/4)^n for every k.
Rational cyclic_pair_sum_miss(std::uint32_t n);
Rational cyclic_pair_diff_miss(std::uint32_t n);
/// L(n/d)^d / 2^n with d = gcd(n, k) (d = n for k = 0).
Rational cyclic_diff_miss(std::uint32_t n, std::uint32_t k);

struct ModeBounds {
    Envelope sum;
    Envelope diff;
};

struct DihedralBounds {
    ModeBounds stated;
    /// sqrt(3)/2 in place of phi/2.
    ModeBounds corrected;
};

/// Rotations of D_2n: sum <= (3/4)^(n/2) (phi/2)^n, diff <= (phi/2)^(2n).
DihedralBounds dihedral_rotation_bounds(std::uint32_t n);
/// Reflections of D_2n: both modes <= (3/4)^n.
DihedralBounds dihedral_reflection_bounds(std::uint32_t n);

/// |G| (1.8/2)^|G|.
double crude_union_bound(std::size_t order);
Rational crude_union_bound_exact(std::size_t order);

struct AuditEntry {
    Element element;
    Mode mode = Mode::Sum;
    std::string bound;  // which family of bound the row checks
    ExactProbability exact;
    std::vector<std::uint32_t> chain_lengths;
    Envelope stated;
    Envelope corrected;
    bool stated_holds = true;
    bool corrected_holds = true;
};

struct AuditReport {
    std::string group;
    std::vector<AuditEntry> entries;

    std::size_t stated_violations() const;
    bool corrected_all_hold() const;
    /// Every violation of a stated bound sits at an element whose chains include
    /// an even-length cycle (L(m) <= phi^m exactly when m is odd).
    bool violations_have_even_chain() const;
};

/// Compares each element's exact miss probability, in both modes, against the
/// per-element crude union envelope (1.8/2)^|G| and, for cyclic and dihedral
/// groups, the group-specific lemma bounds. Reports; never throws on a violation.
AuditReport bound_audit(const FiniteGroup& group);

}  // namespace mstd
