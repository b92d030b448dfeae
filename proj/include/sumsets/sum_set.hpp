#pragma once

#include <cstdint>
#include <vector>

namespace sumsets {

// Value set of a sumset operator: dense bit-vector over [offset, offset+width).
class SumSet {
public:
    SumSet() = default; // empty set

    static SumSet from_values(const std::vector<std::int64_t>& values);

    // Adopts a raw word block whose bit i encodes the value offset + i.
    static SumSet from_words(std::int64_t offset, std::vector<std::uint64_t> words);

    bool contains(std::int64_t v) const;
    std::size_t cardinality() const { return cardinality_; }
    bool empty() const { return cardinality_ == 0; }

    std::vector<std::int64_t> values() const; // strictly increasing
    std::int64_t min_value() const;           // throws std::logic_error on empty
    std::int64_t max_value() const;

    std::int64_t offset() const { return offset_; }

    // Set equality, independent of frame placement.
    bool operator==(const SumSet& other) const;

private:
    std::int64_t offset_ = 0;
    std::vector<std::uint64_t> words_;
    std::size_t cardinality_ = 0;
};

} // namespace sumsets
