#include "mstd/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mstd/error.hpp"

namespace mstd {

namespace {

Rational three_quarters_pow(std::uint32_t m) {
    return Rational(pow_big(3, m), pow_big(4, m));
}

void check_residue(std::uint32_t n, std::uint32_t k) {
    if (n == 0) throw Error(ErrorKind::InvalidParameter, "n must be >= 1");
    if (k >= n) throw Error(ErrorKind::InvalidElement, "k=" + std::to_string(k) + " not in Z/" + std::to_string(n));
}

Envelope halves(std::uint32_t three_quarters_halves, std::uint32_t golden_half = 0) {
    return Envelope{Rational(1), three_quarters_halves, golden_half};
}

}  // namespace

Rational cyclic_sum_miss(std::uint32_t n, std::uint32_t k) {
    check_residue(n, k);
    if (n % 2 == 0) {
        if (k % 2 == 0) return Rational(1, 4) * three_quarters_pow(n / 2 - 1);
        return three_quarters_pow(n / 2);
    }
    return Rational(1, 2) * three_quarters_pow((n - 1) / 2);
}

Rational cyclic_pair_sum_miss(std::uint32_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidParameter, "n must be >= 1");
    return three_quarters_pow(n);
}

Rational cyclic_pair_diff_miss(std::uint32_t n) { return cyclic_pair_sum_miss(n); }

Rational cyclic_diff_miss(std::uint32_t n, std::uint32_t k) {
    check_residue(n, k);
    const std::uint32_t d = std::gcd(n, k);  // gcd(n, 0) = n
    return Rational(boost::multiprecision::pow(lucas(n / d), d), BigInt(1) << n);
}

DihedralBounds dihedral_rotation_bounds(std::uint32_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidParameter, "n must be >= 1");
    return {
        .stated = {.sum = halves(n, n), .diff = halves(0, 2 * n)},
        .corrected = {.sum = halves(2 * n), .diff = halves(2 * n)},
    };
}

DihedralBounds dihedral_reflection_bounds(std::uint32_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidParameter, "n must be >= 1");
    return {
        .stated = {.sum = halves(2 * n), .diff = halves(2 * n)},
        .corrected = {.sum = halves(2 * n), .diff = halves(2 * n)},
    };
}

double crude_union_bound(std::size_t order) {
    return static_cast<double>(order) * std::pow(0.9, static_cast<double>(order));
}

Rational crude_union_bound_exact(std::size_t order) {
    return Rational(order) * Rational(pow_big(9, order), pow_big(10, order));
}

std::size_t AuditReport::stated_violations() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const AuditEntry& e) { return !e.stated_holds; }));
}

bool AuditReport::corrected_all_hold() const {
    return std::all_of(entries.begin(), entries.end(), [](const AuditEntry& e) { return e.corrected_holds; });
}

bool AuditReport::violations_have_even_chain() const {
    return std::all_of(entries.begin(), entries.end(), [](const AuditEntry& e) {
        return e.stated_holds || std::any_of(e.chain_lengths.begin(), e.chain_lengths.end(),
                                            [](std::uint32_t m) { return m % 2 == 0; });
    });
}

AuditReport bound_audit(const FiniteGroup& group) {
    const auto order = static_cast<std::uint32_t>(group.order());
    const auto& desc = group.descriptor();
    std::vector<std::vector<AuditEntry>> per_element(order);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t gi = 0; gi < static_cast<std::int64_t>(order); ++gi) {
        const Element g{static_cast<std::uint32_t>(gi)};
        for (Mode mode : {Mode::Sum, Mode::Diff}) {
            const auto decomposition = chains(group, g, mode);
            const ExactProbability exact = miss_probability(group, g, mode);
            auto add = [&](std::string name, Envelope stated, Envelope corrected) {
                AuditEntry e{g, mode, std::move(name), exact, decomposition.cycle_lengths(), stated, corrected};
                e.stated_holds = stated.holds(exact);
                e.corrected_holds = corrected.holds(exact);
                per_element[g.index].push_back(std::move(e));
            };
            add("union-element", Envelope{Rational(pow_big(9, order), pow_big(10, order)), 0, 0}, halves(order));
            if (desc.kind == GroupKind::Cyclic) {
                if (mode == Mode::Sum) add("cyclic-sum", halves(order), halves(order));
                else add("cyclic-diff", halves(0, order), halves(order));
            } else if (desc.kind == GroupKind::Dihedral) {
                const bool rotation = g.index < desc.parameter;
                const auto b = rotation ? dihedral_rotation_bounds(desc.parameter)
                                        : dihedral_reflection_bounds(desc.parameter);
                const std::string name = rotation ? "dihedral-rotation" : "dihedral-reflection";
                if (mode == Mode::Sum) add(name + "-sum", b.stated.sum, b.corrected.sum);
                else add(name + "-diff", b.stated.diff, b.corrected.diff);
            }
        }
    }

    AuditReport report{group.name(), {}};
    for (auto& rows : per_element)
        for (auto& e : rows) report.entries.push_back(std::move(e));
    return report;
}

}  // namespace mstd
