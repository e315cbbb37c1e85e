#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gaingraph {

using Complex = std::complex<double>;

/// Default tolerance (in turns) for equality of inexact gains.
inline constexpr double kGainTolerance = 1e-9;

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// An element of the circle group, stored as an angle measured in turns.
///
/// Every gain carries a 64-bit fixed-point angle (the turn fraction scaled
/// by 2^64), so products and inverses are exact modular integer arithmetic:
/// the group laws hold bit-for-bit, not merely to rounding. Gains built from
/// a rational p/q additionally remember the reduced fraction, which keeps
/// products such as (1/3)^3 exactly neutral. Mixing an exact and an inexact
/// gain yields an inexact gain.
class Gain {
public:
    /// Neutral gain (exact 0 turns).
    constexpr Gain() = default;

    static Gain from_turns(double turns);
    static Gain from_radians(double radians);
    static Gain from_fixed(std::uint64_t fixed);
    /// Exact gain p/q turns; p may be negative or exceed q (reduced mod 1).
    static Gain rational(std::int64_t num, std::int64_t den);
    static Gain half_turn() { return rational(1, 2); }

    /// Parses a turns token: "p/q" (exact) or a decimal such as "0.25".
    /// Decimal fractions are rounded once, directly into fixed point.
    static Gain parse_turns(std::string_view token);
    /// Parses a command-line angle: "Xturns", "Xrad", "p/q" or a bare turns value.
    static Gain parse_angle(std::string_view token);

    std::uint64_t fixed() const { return fixed_; }
    double turns() const;
    double radians() const;
    /// e^{2πi·turns}; quarter turns are returned exactly.
    Complex value() const;

    bool is_exact() const { return exact_; }
    std::optional<Rational> exact() const;

    Gain inverse() const;
    Gain negated() const { return *this * half_turn(); }

    /// Distance, in turns, to the nearest integer (0 means neutral).
    double distance_to_neutral() const;
    /// Turn distance between this gain and `other` on the circle.
    double distance(const Gain& other) const;
    bool is_neutral(double tol = kGainTolerance) const;
    bool approx_equal(const Gain& other, double tol = kGainTolerance) const;
    /// True for 1 and -1, the only self-inverse gains.
    bool is_self_inverse() const { return fixed_ == 0 || fixed_ == (std::uint64_t{1} << 63); }

    /// Canonical token: "p/q" for exact gains (or "0"), else the shortest
    /// decimal that parses back to the same fixed-point value.
    std::string to_string() const;

    friend Gain operator*(const Gain& a, const Gain& b);
    Gain& operator*=(const Gain& other) { return *this = *this * other; }

    /// Equality and ordering compare the fixed-point angle only.
    friend bool operator==(const Gain& a, const Gain& b) { return a.fixed_ == b.fixed_; }
    friend std::strong_ordering operator<=>(const Gain& a, const Gain& b) { return a.fixed_ <=> b.fixed_; }

private:
    std::uint64_t fixed_ = 0;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    bool exact_ = true;
};

/// Fixed-point value for an arbitrary decimal fraction string of digits.
std::uint64_t decimal_fraction_to_fixed(std::string_view digits);
/// Shortest decimal (no sign, in [0,1)) whose parse equals `fixed`.
std::string fixed_to_decimal(std::uint64_t fixed);

}  // namespace gaingraph
