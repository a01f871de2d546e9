#include "mstd/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "mstd/error.hpp"

namespace mstd {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidParameter: return "invalid-parameter";
        case ErrorKind::InvalidElement: return "invalid-element";
        case ErrorKind::InvalidUniverse: return "invalid-universe";
        case ErrorKind::NotAGroup: return "not-a-group";
        case ErrorKind::WrongGroupKind: return "wrong-group-kind";
        case ErrorKind::OracleCapExceeded: return "oracle-cap-exceeded";
        case ErrorKind::CensusTooLarge: return "census-too-large";
        case ErrorKind::Parse: return "parse-error";
    }
    return "unknown";
}

namespace {

std::optional<std::uint32_t> parse_uint(std::string_view text) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
    return value;
}

void check_order(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidParameter, "group order parameter must be >= 1");
    if (n > kMaxGroupOrder)
        throw Error(ErrorKind::InvalidParameter,
                    "group order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxGroupOrder));
}

std::string dihedral_label(std::size_t i, bool reflection) {
    std::string out;
    if (i == 1) out = "a";
    else if (i > 1) out = "a" + std::to_string(i);
    if (reflection) out += "b";
    if (out.empty()) out = "e";
    return out;
}

}  // namespace

std::string GroupDescriptor::to_string() const {
    switch (kind) {
        case GroupKind::Cyclic: return "cyclic:" + std::to_string(parameter);
        case GroupKind::Dihedral: return "dihedral:" + std::to_string(parameter);
        case GroupKind::Custom: return "custom";
    }
    return "custom";
}

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
    if (text == "custom") return {GroupKind::Custom, 0};
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        auto head = text.substr(0, colon);
        auto value = parse_uint(std::string_view(text).substr(colon + 1));
        if (value && head == "cyclic") return {GroupKind::Cyclic, *value};
        if (value && head == "dihedral") return {GroupKind::Dihedral, *value};
    }
    throw Error(ErrorKind::Parse, "bad group descriptor '" + text + "'");
}

const std::string& FiniteGroup::label(Element x) const {
    check(x);
    return labels_[x.index];
}

void FiniteGroup::check(Element x) const {
    if (x.index >= order_)
        throw Error(ErrorKind::InvalidElement,
                    "element index " + std::to_string(x.index) + " out of range for order " + std::to_string(order_));
}

Element FiniteGroup::compose(Element x, Element y) const {
    check(x);
    check(y);
    return {mul(x.index, y.index)};
}

Element FiniteGroup::inverse_of(Element x) const {
    check(x);
    return {inverse_[x.index]};
}

std::uint32_t FiniteGroup::order_of(Element x) const {
    check(x);
    std::uint32_t m = 1;
    for (std::uint32_t power = x.index; power != identity_; power = mul(power, x.index)) ++m;
    return m;
}

Element FiniteGroup::parse_element(const std::string& text) const {
    auto it = std::find(labels_.begin(), labels_.end(), text);
    if (it != labels_.end()) return {static_cast<std::uint32_t>(it - labels_.begin())};
    if (auto value = parse_uint(text); value && *value < order_) return {*value};
    throw Error(ErrorKind::InvalidElement, "unknown element '" + text + "' in " + name_);
}

bool FiniteGroup::is_abelian() const noexcept {
    for (std::size_t x = 0; x < order_; ++x)
        for (std::size_t y = x + 1; y < order_; ++y)
            if (table_[x * order_ + y] != table_[y * order_ + x]) return false;
    return true;
}

void FiniteGroup::finalize() {
    // FNV-1a over order and table entries.
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    feed(order_);
    for (auto v : table_) feed(v);
    fingerprint_ = h;
}

FiniteGroup make_cyclic(std::size_t n) {
    check_order(n);
    FiniteGroup g;
    g.order_ = n;
    g.identity_ = 0;
    g.table_.resize(n * n);
    g.inverse_.resize(n);
    g.labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) g.table_[i * n + j] = static_cast<std::uint32_t>((i + j) % n);
        g.inverse_[i] = static_cast<std::uint32_t>((n - i) % n);
        g.labels_[i] = std::to_string(i);
    }
    g.descriptor_ = {GroupKind::Cyclic, static_cast<std::uint32_t>(n)};
    g.name_ = "Z" + std::to_string(n);
    g.finalize();
    return g;
}

FiniteGroup make_dihedral(std::size_t n) {
    check_order(2 * n);
    FiniteGroup g;
    const std::size_t order = 2 * n;
    g.order_ = order;
    g.identity_ = 0;
    g.table_.resize(order * order);
    g.inverse_.resize(order);
    g.labels_.resize(order);
    // (a^i b^s)(a^j b^t) = a^(i + (-1)^s j) b^(s+t)
    for (std::size_t x = 0; x < order; ++x) {
        const std::size_t i = x % n, s = x / n;
        for (std::size_t y = 0; y < order; ++y) {
            const std::size_t j = y % n, t = y / n;
            const std::size_t rot = s == 0 ? (i + j) % n : (i + n - j) % n;
            g.table_[x * order + y] = static_cast<std::uint32_t>(rot + n * (s ^ t));
        }
        g.inverse_[x] = static_cast<std::uint32_t>(s == 0 ? (n - i) % n : x);
        g.labels_[x] = dihedral_label(i, s == 1);
    }
    g.descriptor_ = {GroupKind::Dihedral, static_cast<std::uint32_t>(n)};
    g.name_ = "D" + std::to_string(order);
    g.finalize();
    return g;
}

FiniteGroup from_table(const std::vector<std::vector<std::uint32_t>>& rows,
                       std::optional<std::vector<std::string>> labels,
                       std::string name,
                       bool validate_associativity) {
    const std::size_t n = rows.size();
    check_order(n);
    FiniteGroup g;
    g.order_ = n;
    g.table_.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw Error(ErrorKind::InvalidParameter, "table is not square");
        for (auto v : row) {
            if (v >= n) throw Error(ErrorKind::InvalidParameter, "table entry " + std::to_string(v) + " out of range");
            g.table_.push_back(v);
        }
    }

    // Cancellation: every row and column is a permutation.
    std::vector<char> seen(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t y = 0; y < n; ++y) {
            auto v = g.table_[x * n + y];
            if (seen[v]++) throw Error(ErrorKind::NotAGroup, "cancellation: row " + std::to_string(x) + " repeats " + std::to_string(v));
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t y = 0; y < n; ++y) {
            auto v = g.table_[y * n + x];
            if (seen[v]++) throw Error(ErrorKind::NotAGroup, "cancellation: column " + std::to_string(x) + " repeats " + std::to_string(v));
        }
    }

    std::optional<std::uint32_t> identity;
    for (std::uint32_t e = 0; e < n && !identity; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) ok = g.table_[e * n + x] == x && g.table_[x * n + e] == x;
        if (ok) identity = e;
    }
    if (!identity) throw Error(ErrorKind::NotAGroup, "identity: no two-sided identity element");
    g.identity_ = *identity;

    g.inverse_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        bool found = false;
        for (std::uint32_t y = 0; y < n && !found; ++y) {
            if (g.table_[x * n + y] == g.identity_ && g.table_[y * n + x] == g.identity_) {
                g.inverse_[x] = y;
                found = true;
            }
        }
        if (!found) throw Error(ErrorKind::NotAGroup, "inverse: element " + std::to_string(x) + " has no two-sided inverse");
    }

    if (validate_associativity) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const std::size_t xy = g.table_[x * n + y];
                for (std::size_t z = 0; z < n; ++z) {
                    if (g.table_[xy * n + z] != g.table_[x * n + g.table_[y * n + z]])
                        throw Error(ErrorKind::NotAGroup, "associativity: witness (" + std::to_string(x) + ", " +
                                                              std::to_string(y) + ", " + std::to_string(z) + ")");
                }
            }
    }

    if (labels) {
        if (labels->size() != n) throw Error(ErrorKind::InvalidParameter, "label count does not match order");
        g.labels_ = std::move(*labels);
    } else {
        g.labels_.resize(n);
        for (std::size_t i = 0; i < n; ++i) g.labels_[i] = std::to_string(i);
    }
    g.descriptor_ = {GroupKind::Custom, 0};
    g.name_ = std::move(name);
    g.finalize();
    return g;
}

void validate_group_axioms(const FiniteGroup& group) {
    const std::size_t n = group.order();
    std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) rows[x][y] = group.mul(x, y);
    auto rebuilt = from_table(rows, group.labels(), group.name(), true);
    if (rebuilt.identity() != group.identity())
        throw Error(ErrorKind::NotAGroup, "identity: stored identity disagrees with table");
    for (std::uint32_t x = 0; x < n; ++x)
        if (rebuilt.inv(x) != group.inv(x)) throw Error(ErrorKind::NotAGroup, "inverse: stored inverse table disagrees");
}

namespace catalog {

FiniteGroup klein_four() {
    // XOR on two bits.
    std::vector<std::vector<std::uint32_t>> rows(4, std::vector<std::uint32_t>(4));
    for (std::uint32_t x = 0; x < 4; ++x)
        for (std::uint32_t y = 0; y < 4; ++y) rows[x][y] = x ^ y;
    return from_table(rows, std::vector<std::string>{"e", "u", "v", "uv"}, "V4");
}

FiniteGroup quaternion() {
    // Units 1,i,j,k (0..3) times a sign; index = unit + 4*negative.
    // unit products: i*j=k, j*k=i, k*i=j, i*i=j*j=k*k=-1, reversed order flips sign.
    struct Signed { std::uint32_t unit; bool negative; };
    auto unit_mul = [](std::uint32_t p, std::uint32_t q) -> Signed {
        if (p == 0) return {q, false};
        if (q == 0) return {p, false};
        if (p == q) return {0, true};
        // cyclic order i->j->k->i is positive
        const std::uint32_t r = 6 - p - q;
        const bool positive = (q == p % 3 + 1);
        return {r, !positive};
    };
    std::vector<std::vector<std::uint32_t>> rows(8, std::vector<std::uint32_t>(8));
    for (std::uint32_t x = 0; x < 8; ++x)
        for (std::uint32_t y = 0; y < 8; ++y) {
            auto prod = unit_mul(x % 4, y % 4);
            const bool negative = prod.negative ^ (x >= 4) ^ (y >= 4);
            rows[x][y] = prod.unit + (negative ? 4 : 0);
        }
    return from_table(rows, std::vector<std::string>{"1", "i", "j", "k", "-1", "-i", "-j", "-k"}, "Q8");
}

}  // namespace catalog

}  // namespace mstd
