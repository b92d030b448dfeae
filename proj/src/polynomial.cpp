#include "sumsets/polynomial.hpp"

#include <stdexcept>

namespace sumsets {

MonicPolynomial::MonicPolynomial(std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.size() < 2)
        throw std::invalid_argument("MonicPolynomial: degree must be at least 1");
    if (coefficients_.back() != 1)
        throw std::invalid_argument("MonicPolynomial: leading coefficient must be 1");
}

MonicPolynomial MonicPolynomial::identity() { return MonicPolynomial({0, 1}); }

MonicPolynomial MonicPolynomial::square() { return MonicPolynomial({0, 0, 1}); }

std::int64_t MonicPolynomial::operator()(std::int64_t x) const {
    std::int64_t acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        if (__builtin_mul_overflow(acc, x, &acc) || __builtin_add_overflow(acc, *it, &acc))
            throw std::overflow_error("MonicPolynomial: evaluation leaves int64 range");
    }
    return acc;
}

} // namespace sumsets
