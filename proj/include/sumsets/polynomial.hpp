#pragma once

#include <cstdint>
#include <vector>

namespace sumsets {

// Monic integer polynomial, constant term first, degree >= 1.
class MonicPolynomial {
public:
    explicit MonicPolynomial(std::vector<std::int64_t> coefficients);

    static MonicPolynomial identity(); // x
    static MonicPolynomial square();   // x^2

    int degree() const { return int(coefficients_.size()) - 1; }
    const std::vector<std::int64_t>& coefficients() const { return coefficients_; }

    // Horner evaluation; throws std::overflow_error if it leaves int64 range.
    std::int64_t operator()(std::int64_t x) const;

    bool operator==(const MonicPolynomial&) const = default;

private:
    std::vector<std::int64_t> coefficients_;
};

} // namespace sumsets
