#include "fano/rational.hpp"

#include <charconv>
#include <limits>

namespace fano {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t parse_i64(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    return value;
}

}  // namespace

std::int64_t Rat::narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

Rat Rat::make_reduced(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rat();
    i128 g = gcd128(num, den);
    Rat r;
    r.num_ = narrow(num / g);
    r.den_ = narrow(den / g);
    return r;
}

Rat::Rat(std::int64_t num, std::int64_t den) : num_(0), den_(1) {
    *this = make_reduced(num, den);
}

Rat Rat::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_i64(text));
    return Rat(parse_i64(text.substr(0, slash)), parse_i64(text.substr(slash + 1)));
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = narrow(-static_cast<i128>(num_));
    r.den_ = den_;
    return r;
}

Rat Rat::operator+(const Rat& o) const {
    return make_reduced(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                        static_cast<i128>(den_) * o.den_);
}

Rat Rat::operator-(const Rat& o) const {
    return make_reduced(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                        static_cast<i128>(den_) * o.den_);
}

Rat Rat::operator*(const Rat& o) const {
    return make_reduced(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
}

Rat Rat::operator/(const Rat& o) const {
    if (o.num_ == 0) throw std::domain_error("division by zero");
    return make_reduced(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
    i128 lhs = static_cast<i128>(num_) * o.den_;
    i128 rhs = static_cast<i128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rat::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace fano
