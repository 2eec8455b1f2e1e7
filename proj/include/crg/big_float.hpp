#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace crg {

/// Owning wrapper around an `mpfr_t` with a fixed mantissa precision.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision = 128);
    BigFloat(long value, mpfr_prec_t precision);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

    bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
    bool is_nan() const noexcept { return mpfr_nan_p(value_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
    int sign() const noexcept { return mpfr_sgn(value_); }

    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const noexcept { return mpfr_get_d(value_, rnd); }

    /// Decimal rendering with `digits` significant digits ("%.{digits}Re").
    std::string to_string(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

    friend void swap(BigFloat& a, BigFloat& b) noexcept { mpfr_swap(a.value_, b.value_); }

private:
    mpfr_t value_;
};

int compare(const BigFloat& a, const BigFloat& b) noexcept;
inline bool operator<(const BigFloat& a, const BigFloat& b) noexcept { return compare(a, b) < 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) noexcept { return compare(a, b) > 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) noexcept { return compare(a, b) <= 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) noexcept { return compare(a, b) >= 0; }
inline bool operator==(const BigFloat& a, const BigFloat& b) noexcept { return compare(a, b) == 0; }

} // namespace crg
