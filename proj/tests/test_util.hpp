#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "sumsets/integer_set.hpp"
#include "sumsets/sum_set.hpp"

namespace sumsets::test {

inline IntegerSet S(std::initializer_list<std::int64_t> elems) {
    return IntegerSet{std::vector<std::int64_t>(elems)};
}

inline std::vector<std::int64_t> V(std::initializer_list<std::int64_t> elems) {
    return std::vector<std::int64_t>(elems);
}

} // namespace sumsets::test
