#include "stcore/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "stcore/numbers.hpp"

namespace stcore {

namespace {

std::uint64_t parse_u64(std::string_view tok, std::string_view what) {
    std::uint64_t v = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(tok) + "'");
    }
    return v;
}

}  // namespace

Partition::Partition(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] == 0) {
            throw std::invalid_argument("partition rows must be positive (row " + std::to_string(i) +
                                        " is 0)");
        }
        if (i > 0 && rows_[i] > rows_[i - 1]) {
            throw std::invalid_argument("partition rows must be weakly decreasing (row " +
                                        std::to_string(i) + ")");
        }
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<std::uint64_t> rows;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        std::size_t j = text.find(' ', i);
        if (j == std::string_view::npos) j = text.size();
        rows.push_back(parse_u64(text.substr(i, j - i), "partition row"));
        i = j;
    }
    return Partition(std::move(rows));
}

std::uint64_t Partition::size() const {
    std::uint64_t n = 0;
    for (auto r : rows_) n += r;
    return n;
}

std::uint64_t Partition::column_height(std::uint64_t j) const {
    // rows are decreasing, so the rows longer than j form a prefix
    auto it = std::partition_point(rows_.begin(), rows_.end(), [j](std::uint64_t r) { return r > j; });
    return static_cast<std::uint64_t>(it - rows_.begin());
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(rows_[i]);
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> hook_lengths(const Partition& p) {
    const auto& rows = p.rows();
    std::vector<std::uint64_t> col_height(rows.empty() ? 0 : rows.front(), 0);
    for (auto r : rows) {
        for (std::uint64_t j = 0; j < r; ++j) ++col_height[j];
    }
    std::vector<std::vector<std::uint64_t>> hooks(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        hooks[i].resize(rows[i]);
        for (std::uint64_t j = 0; j < rows[i]; ++j) {
            const std::uint64_t arm = rows[i] - j - 1;
            const std::uint64_t leg = col_height[j] - i - 1;
            hooks[i][j] = arm + leg + 1;
        }
    }
    return hooks;
}

bool is_p_core(const Partition& p, std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("is_p_core: q must be >= 1");
    for (const auto& row : hook_lengths(p)) {
        if (std::find(row.begin(), row.end(), q) != row.end()) return false;
    }
    return true;
}

HookSet first_column_hooks(const Partition& p) {
    const auto& rows = p.rows();
    const std::size_t k = rows.size();
    HookSet a(k);
    // bottom row has the smallest first-column hook
    for (std::size_t i = 0; i < k; ++i) a[k - 1 - i] = rows[i] + (k - 1 - i);
    return a;
}

HookSet normalize_hookset(std::span<const std::uint64_t> hooks) {
    HookSet a(hooks.begin(), hooks.end());
    std::sort(a.begin(), a.end());
    if (!a.empty() && a.front() == 0) {
        throw std::invalid_argument("hook set must contain positive integers only");
    }
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
        throw std::invalid_argument("hook set must not contain duplicates");
    }
    return a;
}

Partition partition_from_hookset(std::span<const std::uint64_t> hooks) {
    const HookSet a = normalize_hookset(hooks);
    const std::size_t k = a.size();
    std::vector<std::uint64_t> rows(k);
    // rows[i] pairs with the (i+1)-th largest hook, which has k-1-i rows below it
    for (std::size_t i = 0; i < k; ++i) rows[i] = a[k - 1 - i] - (k - 1 - i);
    return Partition(std::move(rows));
}

std::uint64_t size_from_hookset(std::span<const std::uint64_t> hooks) {
    const HookSet a = normalize_hookset(hooks);
    std::uint64_t sum = 0;
    for (auto x : a) sum += x;
    const std::uint64_t k = a.size();
    return k == 0 ? 0 : sum - k * (k - 1) / 2;
}

bool is_downset(std::span<const std::uint64_t> hooks, std::uint64_t s, std::uint64_t t) {
    require_coprime(s, t);
    HookSet a(hooks.begin(), hooks.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    auto contains = [&a](std::uint64_t x) { return std::binary_search(a.begin(), a.end(), x); };
    for (auto x : a) {
        if (x == 0) return false;
        for (auto step : {s, t}) {
            if (x < step) continue;
            if (x == step || !contains(x - step)) return false;
        }
    }
    return true;
}

std::vector<bool> representable_sieve(std::uint64_t s, std::uint64_t t, std::uint64_t limit) {
    std::vector<bool> rep(limit + 1, false);
    rep[0] = true;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        rep[n] = (n >= s && rep[n - s]) || (n >= t && rep[n - t]);
    }
    return rep;
}

HookSet semigroup_gaps(std::uint64_t s, std::uint64_t t) {
    require_coprime(s, t);
    if (s == 1 || t == 1) return {};
    const std::uint64_t frobenius = s * t - s - t;
    const auto rep = representable_sieve(s, t, frobenius);
    HookSet gaps;
    for (std::uint64_t n = 1; n <= frobenius; ++n) {
        if (!rep[n]) gaps.push_back(n);
    }
    return gaps;
}

Downset::Downset(HookSet elements, std::uint64_t s, std::uint64_t t)
    : elements_(normalize_hookset(elements)), s_(s), t_(t) {
    if (!is_downset(elements_, s, t)) {
        throw std::invalid_argument("{" + format_hookset(elements_) + "} is not a (" +
                                    std::to_string(s) + "," + std::to_string(t) + ") downset");
    }
}

Downset Downset::trusted(HookSet elements, std::uint64_t s, std::uint64_t t) {
#ifndef NDEBUG
    return Downset(std::move(elements), s, t);
#else
    return Downset(std::move(elements), s, t, NoCheck{});
#endif
}

std::string format_hookset(std::span<const std::uint64_t> hooks) {
    HookSet a(hooks.begin(), hooks.end());
    std::sort(a.begin(), a.end());
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(a[i]);
    }
    return out;
}

HookSet parse_hookset(std::string_view text) {
    HookSet a;
    if (text.empty()) return a;
    std::size_t i = 0;
    while (true) {
        std::size_t j = text.find(',', i);
        if (j == std::string_view::npos) j = text.size();
        a.push_back(parse_u64(text.substr(i, j - i), "hook set element"));
        if (j == text.size()) break;
        i = j + 1;
    }
    return normalize_hookset(a);
}

}  // namespace stcore
