#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fano {

// Exact rational number. Stored reduced with a positive denominator;
// every operation computes through 128-bit intermediates and throws
// std::overflow_error if a reduced result does not fit in 64 bits.
// There is no floating-point path anywhere: comparisons and the
// integrality test are exact.
class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    constexpr Rat(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rat(std::int64_t num, std::int64_t den);

    // Accepts "-3", "507/40"; whitespace is not tolerated.
    static Rat parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    Rat operator-() const;
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;  // throws std::domain_error on /0

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rat& o) const;

    // "507/40" for proper fractions, "14" for integers.
    std::string str() const;

private:
    using i128 = __int128;
    static Rat make_reduced(i128 num, i128 den);
    static std::int64_t narrow(i128 v);

    std::int64_t num_;
    std::int64_t den_;
};

inline Rat operator+(std::int64_t a, const Rat& b) { return Rat(a) + b; }
inline Rat operator-(std::int64_t a, const Rat& b) { return Rat(a) - b; }
inline Rat operator*(std::int64_t a, const Rat& b) { return Rat(a) * b; }
inline Rat operator/(std::int64_t a, const Rat& b) { return Rat(a) / b; }

}  // namespace fano
