#include "gaingraph/gain.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>

#include "gaingraph/errors.hpp"

namespace gaingraph {
namespace {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

constexpr std::uint64_t kQuarter = std::uint64_t{1} << 62;
constexpr std::uint64_t kHalf = std::uint64_t{1} << 63;
constexpr std::int64_t kMaxExactDen = std::int64_t{1} << 62;
constexpr double kTwoPow64 = 18446744073709551616.0;

std::uint64_t rational_to_fixed(std::int64_t num, std::int64_t den) {
    u128 scaled = (static_cast<u128>(num) << 64) + static_cast<u128>(den / 2);
    return static_cast<std::uint64_t>(scaled / static_cast<u128>(den));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t value = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("invalid rational turns '" + std::string(whole) + "'");
    return value;
}

double parse_double(std::string_view s, std::string_view whole) {
    std::string buf(s);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v))
        throw ParseError("invalid number '" + std::string(whole) + "'");
    return v;
}

}  // namespace

std::uint64_t decimal_fraction_to_fixed(std::string_view digits) {
    // __int128 holds 2 * 10^38 comfortably; further digits are below 2^-64.
    constexpr std::size_t kMaxDigits = 38;
    if (digits.size() > kMaxDigits) digits = digits.substr(0, kMaxDigits);
    u128 num = 0;
    u128 den = 1;
    for (char c : digits) {
        num = num * 10 + static_cast<u128>(c - '0');
        den *= 10;
    }
    std::uint64_t fixed = 0;
    u128 rem = num;
    for (int bit = 0; bit < 64; ++bit) {
        rem <<= 1;
        fixed <<= 1;
        if (rem >= den) {
            rem -= den;
            fixed |= 1;
        }
    }
    if (2 * rem >= den) ++fixed;  // wraps to 0 for values rounding up to 1
    return fixed;
}

std::string fixed_to_decimal(std::uint64_t fixed) {
    if (fixed == 0) return "0";
    for (int k = 1; k <= 20; ++k) {
        std::string digits;
        u128 frac = fixed;
        for (int i = 0; i < k; ++i) {
            frac *= 10;
            digits.push_back(static_cast<char>('0' + static_cast<int>(frac >> 64)));
            frac &= ~std::uint64_t{0};
        }
        bool carry = frac >= kHalf;
        for (int i = k - 1; carry && i >= 0; --i) {
            if (digits[i] == '9') {
                digits[i] = '0';
            } else {
                ++digits[i];
                carry = false;
            }
        }
        if (carry) continue;  // rounded up to a whole turn
        while (!digits.empty() && digits.back() == '0') digits.pop_back();
        if (digits.empty()) continue;
        if (decimal_fraction_to_fixed(digits) == fixed) return "0." + digits;
    }
    // Unreachable: 20 digits resolve 2^-64.
    return "0." + std::to_string(fixed);
}

Gain Gain::from_fixed(std::uint64_t fixed) {
    Gain g;
    g.fixed_ = fixed;
    g.exact_ = false;
    g.num_ = 0;
    g.den_ = 1;
    return g;
}

Gain Gain::from_turns(double turns) {
    if (!std::isfinite(turns)) throw GraphError("gain angle must be finite");
    double frac = turns - std::floor(turns);
    double scaled = std::nearbyint(std::ldexp(frac, 64));
    if (scaled >= kTwoPow64) return from_fixed(0);
    return from_fixed(static_cast<std::uint64_t>(scaled));
}

Gain Gain::from_radians(double radians) { return from_turns(radians / (2.0 * std::numbers::pi)); }

Gain Gain::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw GraphError("rational gain with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den > kMaxExactDen) throw GraphError("rational gain denominator too large");
    num %= den;
    if (num < 0) num += den;
    std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    Gain out;
    out.num_ = num;
    out.den_ = den;
    out.exact_ = true;
    out.fixed_ = rational_to_fixed(num, den);
    return out;
}

Gain Gain::parse_turns(std::string_view token) {
    std::string_view s = trim(token);
    if (s.empty()) throw ParseError("empty turns value");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::int64_t p = parse_int(trim(s.substr(0, slash)), token);
        std::int64_t q = parse_int(trim(s.substr(slash + 1)), token);
        if (q == 0) throw ParseError("zero denominator in '" + std::string(token) + "'");
        return rational(p, q);
    }
    bool negative = false;
    std::string_view body = s;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    bool plain = !body.empty() && std::all_of(body.begin(), body.end(), [](char c) {
        return (c >= '0' && c <= '9') || c == '.';
    }) && std::count(body.begin(), body.end(), '.') <= 1 && body != ".";
    if (!plain) return from_turns(parse_double(s, token));
    std::string_view frac;
    if (auto dot = body.find('.'); dot != std::string_view::npos) frac = body.substr(dot + 1);
    Gain g = from_fixed(decimal_fraction_to_fixed(frac));
    return negative ? g.inverse() : g;
}

Gain Gain::parse_angle(std::string_view token) {
    std::string_view s = trim(token);
    if (ends_with(s, "turns")) return parse_turns(s.substr(0, s.size() - 5));
    if (ends_with(s, "rad")) return from_radians(parse_double(trim(s.substr(0, s.size() - 3)), token));
    return parse_turns(s);
}

double Gain::turns() const {
    if (exact_) return static_cast<double>(num_) / static_cast<double>(den_);
    double t = std::ldexp(static_cast<double>(fixed_), -64);
    return t >= 1.0 ? std::nextafter(1.0, 0.0) : t;
}

double Gain::radians() const { return 2.0 * std::numbers::pi * turns(); }

Complex Gain::value() const {
    switch (fixed_) {
        case 0: return {1.0, 0.0};
        case kQuarter: return {0.0, 1.0};
        case kHalf: return {-1.0, 0.0};
        case 3 * kQuarter: return {0.0, -1.0};
        default: break;
    }
    double angle;
    if (exact_) {
        // Symmetric range keeps the phase accurate near a full turn.
        double t = static_cast<double>(num_) / static_cast<double>(den_);
        angle = 2.0 * std::numbers::pi * (t >= 0.5 ? t - 1.0 : t);
    } else {
        angle = 2.0 * std::numbers::pi * std::ldexp(static_cast<double>(static_cast<std::int64_t>(fixed_)), -64);
    }
    return {std::cos(angle), std::sin(angle)};
}

std::optional<Rational> Gain::exact() const {
    if (!exact_) return std::nullopt;
    return Rational{num_, den_};
}

Gain Gain::inverse() const {
    if (exact_) return rational(den_ - num_, den_);
    return from_fixed(std::uint64_t{0} - fixed_);
}

double Gain::distance_to_neutral() const {
    std::uint64_t mag = fixed_ <= kHalf ? fixed_ : std::uint64_t{0} - fixed_;
    return std::ldexp(static_cast<double>(mag), -64);
}

double Gain::distance(const Gain& other) const { return (inverse() * other).distance_to_neutral(); }

bool Gain::is_neutral(double tol) const {
    if (exact_) return num_ == 0;
    return distance_to_neutral() <= tol;
}

bool Gain::approx_equal(const Gain& other, double tol) const { return (inverse() * other).is_neutral(tol); }

std::string Gain::to_string() const {
    if (exact_) {
        if (num_ == 0) return "0";
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    return fixed_to_decimal(fixed_);
}

Gain operator*(const Gain& a, const Gain& b) {
    if (a.exact_ && b.exact_) {
        std::int64_t g = std::gcd(a.den_, b.den_);
        i128 lcm = static_cast<i128>(a.den_ / g) * b.den_;
        if (lcm <= kMaxExactDen) {
            auto l = static_cast<std::int64_t>(lcm);
            i128 num = static_cast<i128>(a.num_) * (l / a.den_) + static_cast<i128>(b.num_) * (l / b.den_);
            return Gain::rational(static_cast<std::int64_t>(num % l), l);
        }
    }
    return Gain::from_fixed(a.fixed_ + b.fixed_);
}

}  // namespace gaingraph
