#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace iasi {

using Value = std::uint64_t;

/// Finite set of non-negative integers, stored strictly increasing.
///
/// Construction from an arbitrary sequence sorts and removes duplicates.
/// The empty set is representable, but every operation that treats a set as
/// a label rejects it.
class IntegerSet {
public:
    IntegerSet() = default;
    IntegerSet(std::initializer_list<Value> values);
    explicit IntegerSet(std::vector<Value> values);

    /// Wraps a vector the caller guarantees is strictly increasing.
    static IntegerSet from_sorted(std::vector<Value> values);

    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] bool empty() const noexcept { return elements_.empty(); }
    [[nodiscard]] Value min() const;
    [[nodiscard]] Value max() const;
    [[nodiscard]] bool contains(Value v) const;
    [[nodiscard]] std::span<const Value> elements() const noexcept { return elements_; }
    [[nodiscard]] auto begin() const noexcept { return elements_.begin(); }
    [[nodiscard]] auto end() const noexcept { return elements_.end(); }

    friend bool operator==(const IntegerSet&, const IntegerSet&) = default;
    friend auto operator<=>(const IntegerSet&, const IntegerSet&) = default;

private:
    std::vector<Value> elements_;
};

/// Renders as "{a,b,c}".
std::string to_string(const IntegerSet& s);

/// Common difference of an AP label, or the undefined marker for singletons
/// and non-progressions. Deliberately not comparable with plain integers.
class DeterministicIndex {
public:
    static constexpr DeterministicIndex undefined() noexcept { return DeterministicIndex{}; }
    static DeterministicIndex of(Value difference);

    [[nodiscard]] constexpr bool defined() const noexcept { return value_ != 0; }
    /// Throws PreconditionError when undefined.
    [[nodiscard]] Value value() const;

    friend constexpr bool operator==(DeterministicIndex, DeterministicIndex) = default;

private:
    constexpr DeterministicIndex() = default;
    explicit constexpr DeterministicIndex(Value v) : value_(v) {}
    Value value_ = 0;
};

std::string to_string(DeterministicIndex d);

/// Arithmetic progression {first + i*difference : 0 <= i < length}.
class APSet {
public:
    /// length >= 2 requires difference >= 1; overflow of the last term is rejected.
    static APSet make(Value first, Value difference, std::size_t length);
    static APSet singleton(Value first);

    [[nodiscard]] Value first() const noexcept { return first_; }
    [[nodiscard]] DeterministicIndex difference() const noexcept { return difference_; }
    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] Value last() const;
    /// Length 2 is a valid progression but below the three-element minimum for arithmetic labels.
    [[nodiscard]] bool sub_minimal() const noexcept { return length_ == 2; }
    [[nodiscard]] IntegerSet expand() const;

    friend bool operator==(const APSet&, const APSet&) = default;

private:
    APSet(Value first, DeterministicIndex difference, std::size_t length)
        : first_(first), difference_(difference), length_(length) {}

    Value first_;
    DeterministicIndex difference_;
    std::size_t length_;
};

/// Returns the progression spelling out `s`, or nothing if `s` is not one.
/// Throws InvalidArgument on the empty set.
std::optional<APSet> detect_ap(const IntegerSet& s);

/// {a + b : a in A, b in B}. Throws InvalidArgument on empty operands and
/// OverflowError if any sum leaves 64 bits.
IntegerSet sumset(const IntegerSet& a, const IntegerSet& b);

/// Partition of A x B into classes of pairs sharing a sum.
class CompatibilityTable {
public:
    using Pair = std::pair<Value, Value>;

    [[nodiscard]] const std::map<Value, std::vector<Pair>>& classes() const noexcept { return classes_; }
    /// Number of distinct classes.
    [[nodiscard]] std::size_t index() const noexcept { return classes_.size(); }
    /// min(|A|, |B|), the largest size any class can reach.
    [[nodiscard]] std::size_t saturated_bound() const noexcept { return saturated_bound_; }
    [[nodiscard]] std::size_t max_class_size() const noexcept;
    [[nodiscard]] std::vector<Value> trivial_sums() const;
    [[nodiscard]] std::vector<Value> saturated_sums() const;

    friend CompatibilityTable compatibility_table(const IntegerSet& a, const IntegerSet& b);

private:
    std::map<Value, std::vector<Pair>> classes_;
    std::size_t saturated_bound_ = 0;
};

CompatibilityTable compatibility_table(const IntegerSet& a, const IntegerSet& b);

/// |A + B| for an AP A of length m and an AP B of length n whose difference
/// is k times that of A. Requires 1 <= k <= m.
std::size_t predicted_edge_cardinality(std::size_t m, std::size_t n, std::size_t k);

/// Sum with overflow detection.
Value checked_add(Value a, Value b);
Value checked_mul(Value a, Value b);

} // namespace iasi
