#include "mstd/set_algebra.hpp"

#include <algorithm>
#include <bit>

#include "mstd/error.hpp"
#include "mstd/kernels.hpp"

namespace mstd {

SubsetMask::SubsetMask(Universe universe) : universe_(universe), words_((universe.size + 63) / 64, 0) {}

SubsetMask SubsetMask::full(const FiniteGroup& group) {
    SubsetMask m(Universe::of(group));
    for (std::size_t i = 0; i < group.order(); ++i) m.insert(i);
    return m;
}

SubsetMask SubsetMask::of(const FiniteGroup& group, std::span<const std::uint32_t> indices) {
    SubsetMask m(Universe::of(group));
    for (auto i : indices) m.insert(i);
    return m;
}

SubsetMask SubsetMask::from_bits(const FiniteGroup& group, std::uint64_t bits) {
    if (group.order() > 64) throw Error(ErrorKind::InvalidParameter, "from_bits needs order <= 64");
    SubsetMask m(Universe::of(group));
    if (group.order() < 64 && (bits >> group.order()) != 0)
        throw Error(ErrorKind::InvalidUniverse, "bit set above group order");
    m.words_[0] = bits;
    return m;
}

SubsetMask SubsetMask::interval(std::size_t n, std::span<const std::uint32_t> values) {
    SubsetMask m(Universe::interval(n));
    for (auto v : values) m.insert(v);
    return m;
}

void SubsetMask::insert(std::size_t i) {
    if (i >= universe_.size)
        throw Error(ErrorKind::InvalidUniverse,
                    "index " + std::to_string(i) + " outside universe of size " + std::to_string(universe_.size));
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

std::size_t SubsetMask::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

std::vector<std::uint32_t> SubsetMask::elements() const {
    std::vector<std::uint32_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
        for (auto bits = words_[w]; bits != 0; bits &= bits - 1)
            out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
    return out;
}

bool SubsetMask::is_subset_of(const SubsetMask& other) const {
    if (!(universe_ == other.universe_)) throw Error(ErrorKind::InvalidUniverse, "masks over different universes");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

SubsetMask SubsetMask::operator|(const SubsetMask& other) const {
    if (!(universe_ == other.universe_)) throw Error(ErrorKind::InvalidUniverse, "masks over different universes");
    SubsetMask out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
    return out;
}

std::string_view to_string(Dominance d) noexcept {
    switch (d) {
        case Dominance::SumDominant: return "sum-dominant";
        case Dominance::Balanced: return "balanced";
        case Dominance::DiffDominant: return "difference-dominant";
    }
    return "balanced";
}

namespace {

void require_group_universe(const FiniteGroup& group, const SubsetMask& s) {
    if (!(s.universe() == Universe::of(group)))
        throw Error(ErrorKind::InvalidUniverse, "subset does not belong to group " + group.name());
}

void require_interval_universe(std::size_t n, const SubsetMask& s) {
    if (!(s.universe() == Universe::interval(n)))
        throw Error(ErrorKind::InvalidUniverse, "subset is not a subset of {0.." + std::to_string(n) + "}");
}

SubsetMask combine(const FiniteGroup& group, const SubsetMask& a, const SubsetMask& b, bool difference) {
    require_group_universe(group, a);
    require_group_universe(group, b);
    SubsetMask out(Universe::of(group));
    std::vector<std::uint64_t> words(a.words().size());
    kernel::pair_combine(group, a.words(), b.words(), difference, words);
    for (std::size_t w = 0; w < words.size(); ++w)
        for (auto bits = words[w]; bits != 0; bits &= bits - 1) out.insert(w * 64 + std::countr_zero(bits));
    return out;
}

SubsetMask from_words(Universe universe, std::span<const std::uint64_t> words) {
    SubsetMask out(universe);
    for (std::size_t w = 0; w < words.size(); ++w)
        for (auto bits = words[w]; bits != 0; bits &= bits - 1) out.insert(w * 64 + std::countr_zero(bits));
    return out;
}

}  // namespace

SubsetMask sumset(const FiniteGroup& group, const SubsetMask& s) { return combine(group, s, s, false); }
SubsetMask diffset(const FiniteGroup& group, const SubsetMask& s) { return combine(group, s, s, true); }

SubsetMask pair_sumset(const FiniteGroup& group, const SubsetMask& a, const SubsetMask& b) {
    return combine(group, a, b, false);
}

SubsetMask pair_diffset(const FiniteGroup& group, const SubsetMask& a, const SubsetMask& b) {
    return combine(group, a, b, true);
}

Classification classify(const FiniteGroup& group, const SubsetMask& s) {
    require_group_universe(group, s);
    const auto sizes = kernel::reference_sizes(group, s.words());
    return {dominance_of(sizes.sum, sizes.diff), sizes.sum, sizes.diff};
}

SubsetMask interval_sumset(std::size_t n, const SubsetMask& s) {
    require_interval_universe(n, s);
    std::vector<std::uint64_t> words((2 * n + 1 + 63) / 64);
    kernel::interval_sum_reference(n, s.words(), words);
    return from_words(Universe::interval(2 * n), words);
}

SubsetMask interval_diffset(std::size_t n, const SubsetMask& s) {
    require_interval_universe(n, s);
    std::vector<std::uint64_t> words((2 * n + 1 + 63) / 64);
    kernel::interval_diff_reference(n, s.words(), words);
    return from_words(Universe::interval(2 * n), words);
}

Classification interval_classify(std::size_t n, const SubsetMask& s) {
    const auto sum = interval_sumset(n, s).count();
    const auto diff = interval_diffset(n, s).count();
    return {dominance_of(sum, diff), sum, diff};
}

SubsetMask restrict_mask(const SubsetMask& s, std::size_t limit, bool keep_high) {
    SubsetMask out(s.universe());
    for (auto i : s.elements())
        if ((i >= limit) == keep_high) out.insert(i);
    return out;
}

DihedralDecomposition dihedral_decompose(const FiniteGroup& group, const SubsetMask& s) {
    if (group.descriptor().kind != GroupKind::Dihedral)
        throw Error(ErrorKind::WrongGroupKind, group.name() + " is not a dihedral group");
    require_group_universe(group, s);
    const std::size_t n = group.descriptor().parameter;
    auto r = restrict_mask(s, n, false);
    auto f = restrict_mask(s, n, true);
    SubsetMask neg_r(s.universe());
    for (auto x : r.elements()) neg_r.insert(group.inv(x));
    return DihedralDecomposition{
        .rotations = r,
        .reflections = f,
        .r_plus_r = pair_sumset(group, r, r),
        .f_plus_f = pair_sumset(group, f, f),
        .r_plus_f = pair_sumset(group, r, f),
        .neg_r_plus_f = pair_sumset(group, neg_r, f),
        .r_minus_r = pair_diffset(group, r, r),
        .f_minus_f = pair_diffset(group, f, f),
        .r_minus_f = pair_diffset(group, r, f),
        .f_minus_r = pair_diffset(group, f, r),
    };
}

}  // namespace mstd
