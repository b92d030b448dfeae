#include "sumsets/integer_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sumsets {

IntegerSet::IntegerSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw std::invalid_argument("IntegerSet: duplicate element");
}

std::int64_t IntegerSet::min() const {
    if (elements_.empty()) throw std::logic_error("IntegerSet::min on empty set");
    return elements_.front();
}

std::int64_t IntegerSet::max() const {
    if (elements_.empty()) throw std::logic_error("IntegerSet::max on empty set");
    return elements_.back();
}

bool IntegerSet::contains(std::int64_t v) const {
    return std::binary_search(elements_.begin(), elements_.end(), v);
}

IntegerSet IntegerSet::dilated(std::int64_t factor) const {
    if (factor == 0) throw std::invalid_argument("dilate: factor must be nonzero");
    std::vector<std::int64_t> out;
    out.reserve(elements_.size());
    for (std::int64_t e : elements_) {
        std::int64_t v;
        if (__builtin_mul_overflow(e, factor, &v))
            throw std::overflow_error("dilate: product leaves int64 range");
        out.push_back(v);
    }
    return IntegerSet(std::move(out));
}

IntegerSet IntegerSet::negated() const { return dilated(-1); }

IntegerSet IntegerSet::translated(std::int64_t shift) const {
    std::vector<std::int64_t> out;
    out.reserve(elements_.size());
    for (std::int64_t e : elements_) {
        std::int64_t v;
        if (__builtin_add_overflow(e, shift, &v))
            throw std::overflow_error("translate: sum leaves int64 range");
        out.push_back(v);
    }
    return IntegerSet(std::move(out));
}

IntegerSet IntegerSet::without(std::int64_t v) const {
    if (!contains(v)) throw std::invalid_argument("without: element not present");
    std::vector<std::int64_t> out;
    out.reserve(elements_.size() - 1);
    for (std::int64_t e : elements_)
        if (e != v) out.push_back(e);
    return IntegerSet(std::move(out));
}

std::vector<std::int64_t> IntegerSet::negation_pairs() const {
    std::vector<std::int64_t> pairs;
    for (std::int64_t e : elements_)
        if (e > 0 && contains(-e)) pairs.push_back(e);
    return pairs;
}

std::size_t IntegerSet::count_negative() const {
    return std::size_t(std::lower_bound(elements_.begin(), elements_.end(), std::int64_t(0)) -
                       elements_.begin());
}

std::size_t IntegerSet::count_positive() const {
    return std::size_t(elements_.end() -
                       std::upper_bound(elements_.begin(), elements_.end(), std::int64_t(0)));
}

std::string IntegerSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) os << ',';
        os << elements_[i];
    }
    os << '}';
    return os.str();
}

} // namespace sumsets
