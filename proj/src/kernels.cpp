#include "mstd/kernels.hpp"

#include <bit>

#include "mstd/error.hpp"

namespace mstd::kernel {

namespace {

inline bool test_bit(std::span<const std::uint64_t> words, std::size_t i) {
    return (words[i / 64] >> (i % 64)) & 1u;
}

std::vector<std::uint32_t> members(std::span<const std::uint64_t> words) {
    std::vector<std::uint32_t> out;
    for (std::size_t w = 0; w < words.size(); ++w)
        for (auto bits = words[w]; bits != 0; bits &= bits - 1)
            out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
    return out;
}

// dst |= src << shift, dst and src of equal word length (bits shifted past the end are dropped).
void shift_or(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::size_t shift) {
    const std::size_t word_shift = shift / 64, bit_shift = shift % 64;
    for (std::size_t i = dst.size(); i-- > word_shift;) {
        const std::size_t j = i - word_shift;
        std::uint64_t v = src[j] << bit_shift;
        if (bit_shift != 0 && j > 0) v |= src[j - 1] >> (64 - bit_shift);
        dst[i] |= v;
    }
}

std::size_t popcount(std::span<const std::uint64_t> words) {
    std::size_t c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
}

}  // namespace

std::size_t pair_combine(const FiniteGroup& group, std::span<const std::uint64_t> left,
                         std::span<const std::uint64_t> right, bool difference, std::span<std::uint64_t> out) {
    const std::size_t n = group.order();
    const auto xs = members(left);
    auto ys = members(right);
    if (difference)
        for (auto& y : ys) y = group.inv(y);
    std::size_t filled = 0;
    for (auto x : xs) {
        for (auto y : ys) {
            const std::uint32_t z = group.mul(x, y);
            const std::uint64_t bit = std::uint64_t{1} << (z % 64);
            if (!(out[z / 64] & bit)) {
                out[z / 64] |= bit;
                ++filled;
            }
        }
        if (filled == n) break;
    }
    return filled;
}

SetSizes reference_sizes(const FiniteGroup& group, std::span<const std::uint64_t> s) {
    std::vector<std::uint64_t> scratch((group.order() + 63) / 64);
    SetSizes sizes;
    sizes.sum = pair_combine(group, s, s, false, scratch);
    std::fill(scratch.begin(), scratch.end(), 0);
    sizes.diff = pair_combine(group, s, s, true, scratch);
    return sizes;
}

std::size_t interval_sum_reference(std::size_t n, std::span<const std::uint64_t> s, std::span<std::uint64_t> out) {
    const auto xs = members(s);
    for (auto x : xs) {
        if (x > n) throw Error(ErrorKind::InvalidUniverse, "interval member above n");
        for (auto y : xs) out[(x + y) / 64] |= std::uint64_t{1} << ((x + y) % 64);
    }
    return popcount(out);
}

std::size_t interval_diff_reference(std::size_t n, std::span<const std::uint64_t> s, std::span<std::uint64_t> out) {
    const auto xs = members(s);
    for (auto x : xs) {
        if (x > n) throw Error(ErrorKind::InvalidUniverse, "interval member above n");
        for (auto y : xs) {
            const std::size_t d = x + n - y;
            out[d / 64] |= std::uint64_t{1} << (d % 64);
        }
    }
    return popcount(out);
}

SetSizes interval_sizes_shift(std::size_t n, std::span<const std::uint64_t> s) {
    const std::size_t words = (2 * n + 1 + 63) / 64;
    // Small fixed buffers cover n < 128; larger intervals fall back to the heap.
    std::uint64_t stack_buf[3][4] = {};
    std::vector<std::uint64_t> heap;
    std::span<std::uint64_t> src, sum, diff;
    if (words <= 4) {
        src = {stack_buf[0], words};
        sum = {stack_buf[1], words};
        diff = {stack_buf[2], words};
    } else {
        heap.assign(3 * words, 0);
        src = {heap.data(), words};
        sum = {heap.data() + words, words};
        diff = {heap.data() + 2 * words, words};
    }
    for (std::size_t i = 0; i < s.size() && i < words; ++i) src[i] = s[i];
    for (std::size_t w = 0; w < s.size(); ++w)
        for (auto bits = s[w]; bits != 0; bits &= bits - 1) {
            const std::size_t x = w * 64 + std::countr_zero(bits);
            shift_or(sum, src, x);
            shift_or(diff, src, n - x);
        }
    return {popcount(sum), popcount(diff)};
}

SmallGroupKernel::SmallGroupKernel(const FiniteGroup& group)
    : order_(group.order()), lanes_((group.order() + 7) / 8) {
    if (order_ > 64) throw Error(ErrorKind::InvalidParameter, "SmallGroupKernel needs order <= 64");
    full_ = order_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;
    sum_table_.assign(order_ * lanes_ * 256, 0);
    diff_table_.assign(order_ * lanes_ * 256, 0);
    for (std::size_t x = 0; x < order_; ++x)
        for (std::size_t lane = 0; lane < lanes_; ++lane) {
            auto* sums = &sum_table_[(x * lanes_ + lane) * 256];
            auto* diffs = &diff_table_[(x * lanes_ + lane) * 256];
            // Build each byte entry from the entry with its lowest bit removed.
            for (std::size_t byte = 1; byte < 256; ++byte) {
                const std::size_t low = static_cast<std::size_t>(std::countr_zero(byte));
                const std::size_t y = lane * 8 + low;
                const std::size_t rest = byte & (byte - 1);
                std::uint64_t s = sums[rest], d = diffs[rest];
                if (y < order_) {
                    const auto xi = static_cast<std::uint32_t>(x), yi = static_cast<std::uint32_t>(y);
                    s |= std::uint64_t{1} << group.mul(xi, yi);
                    d |= std::uint64_t{1} << group.mul(xi, group.inv(yi));
                }
                sums[byte] = s;
                diffs[byte] = d;
            }
        }
}

std::uint64_t SmallGroupKernel::combine(const std::vector<std::uint64_t>& table, std::uint64_t s) const noexcept {
    std::uint64_t acc = 0;
    for (auto bits = s; bits != 0; bits &= bits - 1) {
        const std::size_t x = static_cast<std::size_t>(std::countr_zero(bits));
        const std::uint64_t* row = &table[x * lanes_ * 256];
        for (std::size_t lane = 0; lane < lanes_; ++lane) acc |= row[lane * 256 + ((s >> (8 * lane)) & 0xff)];
        if (acc == full_) break;
    }
    return acc;
}

SetSizes SmallGroupKernel::sizes(std::uint64_t s) const noexcept {
    return {static_cast<std::size_t>(std::popcount(sumset(s))), static_cast<std::size_t>(std::popcount(diffset(s)))};
}

}  // namespace mstd::kernel
