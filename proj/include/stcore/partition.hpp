#pragma once

// Integer partitions, hook lengths, p-cores and the first-column hook set.
//
// A partition with k rows is determined by the hook lengths of its first
// column, a_i = rows[i] + (k - 1 - i) in 0-indexed form. For an (s,t)-core
// those hook lengths form a downset of the order generated by a < a+s and
// a < a+t that avoids 0.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stcore {

/// Sorted (ascending), duplicate-free set of positive integers.
using HookSet = std::vector<std::uint64_t>;

class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless rows are positive and weakly decreasing.
    explicit Partition(std::vector<std::uint64_t> rows);

    /// Space-separated row lengths; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<std::uint64_t>& rows() const { return rows_; }
    std::size_t num_rows() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    /// Number of boxes.
    std::uint64_t size() const;
    /// Number of rows with length > j (the height of column j, 0-indexed).
    std::uint64_t column_height(std::uint64_t j) const;

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint64_t> rows_;
};

/// hooks[i][j] = arm + leg + 1 for the box in row i, column j (0-indexed).
std::vector<std::vector<std::uint64_t>> hook_lengths(const Partition& p);

/// True iff no hook has length exactly q. Requires q >= 1.
bool is_p_core(const Partition& p, std::uint64_t q);

/// Hook lengths of the first-column boxes, ascending.
HookSet first_column_hooks(const Partition& p);

/// Inverse of first_column_hooks. Accepts any order; throws on 0 or duplicates.
Partition partition_from_hookset(std::span<const std::uint64_t> hooks);

/// Σa − C(|A|, 2): the size of partition_from_hookset(A) without building it.
std::uint64_t size_from_hookset(std::span<const std::uint64_t> hooks);

/// Local closure test: 0 ∉ A and, for each a ∈ A, a−s and a−t are negative or in A.
/// Throws std::invalid_argument unless gcd(s, t) = 1.
bool is_downset(std::span<const std::uint64_t> hooks, std::uint64_t s, std::uint64_t t);

/// representable[n] for n in [0, limit]: whether n = x·s + y·t with x, y >= 0.
std::vector<bool> representable_sieve(std::uint64_t s, std::uint64_t t, std::uint64_t limit);

/// Gaps of the numerical semigroup <s, t>, ascending. This is the maximal downset.
HookSet semigroup_gaps(std::uint64_t s, std::uint64_t t);

/// A validated downset for a coprime pair (s, t).
class Downset {
public:
    /// Throws std::invalid_argument if the elements do not form an (s,t) downset.
    Downset(HookSet elements, std::uint64_t s, std::uint64_t t);

    /// Skips validation in release builds. `elements` must already be sorted.
    static Downset trusted(HookSet elements, std::uint64_t s, std::uint64_t t);

    const HookSet& elements() const { return elements_; }
    std::uint64_t s() const { return s_; }
    std::uint64_t t() const { return t_; }
    std::size_t size() const { return elements_.size(); }

    friend bool operator==(const Downset&, const Downset&) = default;

private:
    struct NoCheck {};
    Downset(HookSet elements, std::uint64_t s, std::uint64_t t, NoCheck)
        : elements_(std::move(elements)), s_(s), t_(t) {}

    HookSet elements_;
    std::uint64_t s_;
    std::uint64_t t_;
};

/// Sorted comma-separated integers, e.g. "1,2,4,5,9,11,12".
std::string format_hookset(std::span<const std::uint64_t> hooks);
HookSet parse_hookset(std::string_view text);

/// Sorted ascending; throws on zero or duplicate elements.
HookSet normalize_hookset(std::span<const std::uint64_t> hooks);

}  // namespace stcore
