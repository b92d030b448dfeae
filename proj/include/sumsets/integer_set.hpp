#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sumsets {

// A finite set of distinct integers, stored sorted ascending.
class IntegerSet {
public:
    IntegerSet() = default;

    // Sorts the input; throws std::invalid_argument on duplicates.
    explicit IntegerSet(std::vector<std::int64_t> elements);

    const std::vector<std::int64_t>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    std::int64_t min() const;
    std::int64_t max() const;
    bool contains(std::int64_t v) const;

    // Element-wise images, re-sorted. dilated() requires factor != 0.
    IntegerSet dilated(std::int64_t factor) const;
    IntegerSet negated() const;
    IntegerSet translated(std::int64_t shift) const;

    // Copy with one element removed; throws if absent.
    IntegerSet without(std::int64_t v) const;

    // All d > 0 with both d and -d present, ascending.
    std::vector<std::int64_t> negation_pairs() const;

    std::size_t count_negative() const;
    std::size_t count_positive() const;

    bool operator==(const IntegerSet&) const = default;

    std::string to_string() const;

private:
    std::vector<std::int64_t> elements_;
};

} // namespace sumsets
