#include "crg/big_float.hpp"

#include <cstdio>
#include <vector>

namespace crg {

BigFloat::BigFloat(mpfr_prec_t precision)
{
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t precision)
{
    mpfr_init2(value_, precision);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept
{
    // Leaves `other` as a valid minimal-precision zero.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const
{
    char fmt[32];
    const char rc = rnd == MPFR_RNDU ? 'U' : rnd == MPFR_RNDD ? 'D' : 'N';
    std::snprintf(fmt, sizeof fmt, "%%.%dR%ce", digits > 0 ? digits - 1 : 0, rc);
    const int len = mpfr_snprintf(nullptr, 0, fmt, value_);
    std::vector<char> buf(static_cast<std::size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt, value_);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

int compare(const BigFloat& a, const BigFloat& b) noexcept { return mpfr_cmp(a.get(), b.get()); }

} // namespace crg
