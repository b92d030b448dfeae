#include "sumsets/sum_set.hpp"

#include <stdexcept>

#include "sumsets/detail/bitops.hpp"

namespace sumsets {

SumSet SumSet::from_values(const std::vector<std::int64_t>& values) {
    SumSet s;
    if (values.empty()) return s;
    std::int64_t lo = values[0], hi = values[0];
    for (std::int64_t v : values) {
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    s.offset_ = lo;
    s.words_.assign(std::size_t(std::uint64_t(hi - lo) / 64 + 1), 0);
    for (std::int64_t v : values) {
        std::size_t i = std::size_t(v - lo);
        if (!detail::test_bit(s.words_, i)) {
            detail::set_bit(s.words_, i);
            ++s.cardinality_;
        }
    }
    return s;
}

SumSet SumSet::from_words(std::int64_t offset, std::vector<std::uint64_t> words) {
    SumSet s;
    s.offset_ = offset;
    s.words_ = std::move(words);
    s.cardinality_ = detail::popcount(s.words_);
    if (s.cardinality_ == 0) {
        s.words_.clear();
        s.offset_ = 0;
    }
    return s;
}

bool SumSet::contains(std::int64_t v) const {
    if (cardinality_ == 0 || v < offset_) return false;
    std::uint64_t i = std::uint64_t(v - offset_);
    if (i >= std::uint64_t(words_.size()) * 64) return false;
    return detail::test_bit(words_, std::size_t(i));
}

std::vector<std::int64_t> SumSet::values() const {
    std::vector<std::int64_t> out;
    out.reserve(cardinality_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            unsigned b = unsigned(std::countr_zero(bits));
            out.push_back(offset_ + std::int64_t(w * 64 + b));
            bits &= bits - 1;
        }
    }
    return out;
}

std::int64_t SumSet::min_value() const {
    if (cardinality_ == 0) throw std::logic_error("SumSet::min_value on empty set");
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return offset_ + std::int64_t(w * 64 + std::countr_zero(words_[w]));
    throw std::logic_error("SumSet: cardinality/word mismatch");
}

std::int64_t SumSet::max_value() const {
    if (cardinality_ == 0) throw std::logic_error("SumSet::max_value on empty set");
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w]) return offset_ + std::int64_t(w * 64 + 63 - std::countl_zero(words_[w]));
    throw std::logic_error("SumSet: cardinality/word mismatch");
}

bool SumSet::operator==(const SumSet& other) const {
    if (cardinality_ != other.cardinality_) return false;
    return values() == other.values();
}

} // namespace sumsets
