#pragma once

#include "crg/big_float.hpp"
#include "crg/rational.hpp"

#include <string>
#include <string_view>

namespace crg {

/// A certified real number: a closed interval [lower, upper] with MPFR
/// endpoints maintained under directed rounding. Every operation returns an
/// enclosure of the exact result whenever the inputs enclose their exact
/// values. The midpoint/radius view is derived on demand.
class BoundedReal {
public:
    /// Exact zero.
    explicit BoundedReal(unsigned precision = 128);
    /// Exact small integer.
    BoundedReal(long value, unsigned precision);

    static BoundedReal from_rational(const Rational& q, unsigned precision);
    static BoundedReal from_integer(const Integer& z, unsigned precision);
    static BoundedReal from_endpoints(BigFloat lower, BigFloat upper);
    /// Interval [mid - rad, mid + rad] from decimal strings; both parsed outward.
    static BoundedReal from_decimal(std::string_view mid, std::string_view rad, unsigned precision);
    static BoundedReal hull(const BoundedReal& a, const BoundedReal& b);

    const BigFloat& lower() const noexcept { return lo_; }
    const BigFloat& upper() const noexcept { return hi_; }
    unsigned precision() const noexcept { return static_cast<unsigned>(lo_.precision()); }

    /// Round-to-nearest midpoint.
    BigFloat mid() const;
    /// Radius rounded up, so [mid - rad, mid + rad] covers [lower, upper].
    BigFloat rad() const;
    double to_double() const { return mid().to_double(); }
    std::string mid_string(int digits = 40) const { return mid().to_string(digits); }
    std::string rad_string(int digits = 6) const { return rad().to_string(digits, MPFR_RNDU); }

    bool is_exact() const noexcept { return lo_ == hi_; }
    bool contains(const Rational& q) const;
    bool contains(const BoundedReal& inner) const;
    bool overlaps(const BoundedReal& other) const;

    /// [lower - r, upper + r] with outward rounding.
    BoundedReal widened(const BigFloat& r) const;
    /// Same interval re-rounded outward to a different precision.
    BoundedReal with_precision(unsigned precision) const;

    BoundedReal operator-() const;
    BoundedReal& operator+=(const BoundedReal& b);
    BoundedReal& operator-=(const BoundedReal& b);
    BoundedReal& operator*=(const BoundedReal& b);
    BoundedReal& operator/=(const BoundedReal& b);

private:
    BoundedReal(BigFloat lo, BigFloat hi, int);

    BigFloat lo_;
    BigFloat hi_;
};

BoundedReal operator+(BoundedReal a, const BoundedReal& b);
BoundedReal operator-(BoundedReal a, const BoundedReal& b);
BoundedReal operator*(BoundedReal a, const BoundedReal& b);
BoundedReal operator/(BoundedReal a, const BoundedReal& b);
BoundedReal operator+(BoundedReal a, long b);
BoundedReal operator-(BoundedReal a, long b);
BoundedReal operator*(BoundedReal a, long b);
BoundedReal operator/(BoundedReal a, long b);
BoundedReal operator-(long a, const BoundedReal& b);
BoundedReal operator/(long a, const BoundedReal& b);
BoundedReal operator*(const Rational& a, const BoundedReal& b);

BoundedReal sqrt(const BoundedReal& x);
BoundedReal exp(const BoundedReal& x);
BoundedReal log(const BoundedReal& x);
BoundedReal pow(const BoundedReal& x, long k);
/// x^y for x > 0.
BoundedReal pow(const BoundedReal& x, const BoundedReal& y);
/// x^q; half-integer exponents go through sqrt, other non-integers need x > 0.
BoundedReal pow(const BoundedReal& x, const Rational& q);

/// True only when every point of `a` is below every point of `b`.
bool definitely_less(const BoundedReal& a, const BoundedReal& b);
bool definitely_greater(const BoundedReal& a, const BoundedReal& b);
bool definitely_less(const BoundedReal& a, const Rational& b);
bool definitely_greater(const BoundedReal& a, const Rational& b);
/// a <= b holds for every point pair.
bool definitely_at_most(const BoundedReal& a, const BoundedReal& b);
bool definitely_at_least(const BoundedReal& a, const Rational& b);

/// Tri-state outcome of an interval comparison against a threshold.
enum class Ordering { below, above, undecided };
/// Classifies `a` against `b`: below means a < b definitely, above means a >= b definitely.
Ordering compare_to(const BoundedReal& a, const Rational& b);

} // namespace crg
