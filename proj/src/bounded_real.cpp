#include "crg/bounded_real.hpp"

#include "crg/errors.hpp"

#include <algorithm>
#include <string>

namespace crg {

namespace {

mpfr_prec_t joint(const BoundedReal& a, const BoundedReal& b)
{
    return static_cast<mpfr_prec_t>(std::max(a.precision(), b.precision()));
}

BigFloat min_of(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }
BigFloat max_of(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Min (rounded down) and max (rounded up) of op over the four endpoint pairs.
std::pair<BigFloat, BigFloat> corners(BinaryOp op, const BoundedReal& a, const BoundedReal& b,
                                      mpfr_prec_t prec)
{
    const BigFloat* xs[2] = {&a.lower(), &a.upper()};
    const BigFloat* ys[2] = {&b.lower(), &b.upper()};
    BigFloat lo(prec);
    BigFloat hi(prec);
    bool first = true;
    for (const auto* x : xs) {
        for (const auto* y : ys) {
            BigFloat d(prec);
            BigFloat u(prec);
            op(d.get(), x->get(), y->get(), MPFR_RNDD);
            op(u.get(), x->get(), y->get(), MPFR_RNDU);
            if (first || d < lo) {
                lo = d;
            }
            if (first || u > hi) {
                hi = u;
            }
            first = false;
        }
    }
    return {std::move(lo), std::move(hi)};
}

} // namespace

BoundedReal::BoundedReal(unsigned precision) : lo_(static_cast<mpfr_prec_t>(precision)), hi_(static_cast<mpfr_prec_t>(precision)) {}

BoundedReal::BoundedReal(long value, unsigned precision)
    : lo_(static_cast<mpfr_prec_t>(precision)), hi_(static_cast<mpfr_prec_t>(precision))
{
    mpfr_set_si(lo_.get(), value, MPFR_RNDD);
    mpfr_set_si(hi_.get(), value, MPFR_RNDU);
}

BoundedReal::BoundedReal(BigFloat lo, BigFloat hi, int) : lo_(std::move(lo)), hi_(std::move(hi)) {}

BoundedReal BoundedReal::from_rational(const Rational& q, unsigned precision)
{
    BigFloat lo(static_cast<mpfr_prec_t>(precision));
    BigFloat hi(static_cast<mpfr_prec_t>(precision));
    mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), 0};
}

BoundedReal BoundedReal::from_integer(const Integer& z, unsigned precision)
{
    BigFloat lo(static_cast<mpfr_prec_t>(precision));
    BigFloat hi(static_cast<mpfr_prec_t>(precision));
    mpfr_set_z(lo.get(), z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi.get(), z.get_mpz_t(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), 0};
}

BoundedReal BoundedReal::from_endpoints(BigFloat lower, BigFloat upper)
{
    if (lower.is_nan() || upper.is_nan() || lower > upper) {
        throw DomainError("BoundedReal: invalid endpoints");
    }
    if (lower.precision() != upper.precision()) {
        const auto p = std::max(lower.precision(), upper.precision());
        BigFloat l(p);
        BigFloat u(p);
        mpfr_set(l.get(), lower.get(), MPFR_RNDD);
        mpfr_set(u.get(), upper.get(), MPFR_RNDU);
        return {std::move(l), std::move(u), 0};
    }
    return {std::move(lower), std::move(upper), 0};
}

BoundedReal BoundedReal::from_decimal(std::string_view mid, std::string_view rad, unsigned precision)
{
    const auto p = static_cast<mpfr_prec_t>(precision);
    const std::string m(mid);
    const std::string r(rad);
    BigFloat mlo(p), mhi(p), rr(p);
    if (mpfr_set_str(mlo.get(), m.c_str(), 10, MPFR_RNDD) != 0 || mpfr_set_str(mhi.get(), m.c_str(), 10, MPFR_RNDU) != 0 ||
        mpfr_set_str(rr.get(), r.c_str(), 10, MPFR_RNDU) != 0) {
        throw DataError("BoundedReal: cannot parse decimal '" + m + "' +/- '" + r + "'");
    }
    if (rr.sign() < 0) {
        throw DataError("BoundedReal: negative radius");
    }
    mpfr_sub(mlo.get(), mlo.get(), rr.get(), MPFR_RNDD);
    mpfr_add(mhi.get(), mhi.get(), rr.get(), MPFR_RNDU);
    return {std::move(mlo), std::move(mhi), 0};
}

BoundedReal BoundedReal::hull(const BoundedReal& a, const BoundedReal& b)
{
    return from_endpoints(min_of(a.lo_, b.lo_), max_of(a.hi_, b.hi_));
}

BigFloat BoundedReal::mid() const
{
    BigFloat m(lo_.precision());
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m;
}

BigFloat BoundedReal::rad() const
{
    const BigFloat m = mid();
    BigFloat a(lo_.precision());
    BigFloat b(lo_.precision());
    mpfr_sub(a.get(), hi_.get(), m.get(), MPFR_RNDU);
    mpfr_sub(b.get(), m.get(), lo_.get(), MPFR_RNDU);
    return max_of(a, b);
}

bool BoundedReal::contains(const Rational& q) const
{
    return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool BoundedReal::contains(const BoundedReal& inner) const { return lo_ <= inner.lo_ && inner.hi_ <= hi_; }

bool BoundedReal::overlaps(const BoundedReal& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

BoundedReal BoundedReal::widened(const BigFloat& r) const
{
    if (r.sign() < 0) {
        throw DomainError("BoundedReal::widened: negative radius");
    }
    BigFloat lo(lo_.precision());
    BigFloat hi(hi_.precision());
    mpfr_sub(lo.get(), lo_.get(), r.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi_.get(), r.get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), 0};
}

BoundedReal BoundedReal::with_precision(unsigned precision) const
{
    const auto p = static_cast<mpfr_prec_t>(precision);
    BigFloat lo(p);
    BigFloat hi(p);
    mpfr_set(lo.get(), lo_.get(), MPFR_RNDD);
    mpfr_set(hi.get(), hi_.get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), 0};
}

BoundedReal BoundedReal::operator-() const
{
    BigFloat lo(hi_.precision());
    BigFloat hi(lo_.precision());
    mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), 0};
}

BoundedReal& BoundedReal::operator+=(const BoundedReal& b)
{
    const auto p = joint(*this, b);
    BigFloat lo(p);
    BigFloat hi(p);
    mpfr_add(lo.get(), lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi_.get(), b.hi_.get(), MPFR_RNDU);
    lo_ = std::move(lo);
    hi_ = std::move(hi);
    return *this;
}

BoundedReal& BoundedReal::operator-=(const BoundedReal& b)
{
    const auto p = joint(*this, b);
    BigFloat lo(p);
    BigFloat hi(p);
    mpfr_sub(lo.get(), lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(hi.get(), hi_.get(), b.lo_.get(), MPFR_RNDU);
    lo_ = std::move(lo);
    hi_ = std::move(hi);
    return *this;
}

BoundedReal& BoundedReal::operator*=(const BoundedReal& b)
{
    const auto p = joint(*this, b);
    if (lo_.sign() >= 0 && b.lo_.sign() >= 0) {
        BigFloat lo(p);
        BigFloat hi(p);
        mpfr_mul(lo.get(), lo_.get(), b.lo_.get(), MPFR_RNDD);
        mpfr_mul(hi.get(), hi_.get(), b.hi_.get(), MPFR_RNDU);
        lo_ = std::move(lo);
        hi_ = std::move(hi);
        return *this;
    }
    auto [lo, hi] = corners(mpfr_mul, *this, b, p);
    lo_ = std::move(lo);
    hi_ = std::move(hi);
    return *this;
}

BoundedReal& BoundedReal::operator/=(const BoundedReal& b)
{
    if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0) {
        throw DomainError("BoundedReal: division by an interval containing zero");
    }
    const auto p = joint(*this, b);
    if (lo_.sign() >= 0 && b.lo_.sign() > 0) {
        BigFloat lo(p);
        BigFloat hi(p);
        mpfr_div(lo.get(), lo_.get(), b.hi_.get(), MPFR_RNDD);
        mpfr_div(hi.get(), hi_.get(), b.lo_.get(), MPFR_RNDU);
        lo_ = std::move(lo);
        hi_ = std::move(hi);
        return *this;
    }
    auto [lo, hi] = corners(mpfr_div, *this, b, p);
    lo_ = std::move(lo);
    hi_ = std::move(hi);
    return *this;
}

BoundedReal operator+(BoundedReal a, const BoundedReal& b) { return a += b; }
BoundedReal operator-(BoundedReal a, const BoundedReal& b) { return a -= b; }
BoundedReal operator*(BoundedReal a, const BoundedReal& b) { return a *= b; }
BoundedReal operator/(BoundedReal a, const BoundedReal& b) { return a /= b; }

namespace {
BoundedReal lift(long v, const BoundedReal& like) { return BoundedReal(v, std::max(like.precision(), 64U)); }
} // namespace

BoundedReal operator+(BoundedReal a, long b) { return a += lift(b, a); }
BoundedReal operator-(BoundedReal a, long b) { return a -= lift(b, a); }
BoundedReal operator*(BoundedReal a, long b) { return a *= lift(b, a); }
BoundedReal operator/(BoundedReal a, long b) { return a /= lift(b, a); }
BoundedReal operator-(long a, const BoundedReal& b) { return lift(a, b) - b; }
BoundedReal operator/(long a, const BoundedReal& b) { return lift(a, b) / b; }
BoundedReal operator*(const Rational& a, const BoundedReal& b)
{
    return BoundedReal::from_rational(a, b.precision()) * b;
}

BoundedReal sqrt(const BoundedReal& x)
{
    if (x.lower().sign() < 0) {
        throw DomainError("sqrt of an interval with negative part");
    }
    BigFloat lo(x.lower().precision());
    BigFloat hi(x.upper().precision());
    mpfr_sqrt(lo.get(), x.lower().get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), x.upper().get(), MPFR_RNDU);
    return BoundedReal::from_endpoints(std::move(lo), std::move(hi));
}

BoundedReal exp(const BoundedReal& x)
{
    BigFloat lo(x.lower().precision());
    BigFloat hi(x.upper().precision());
    mpfr_exp(lo.get(), x.lower().get(), MPFR_RNDD);
    mpfr_exp(hi.get(), x.upper().get(), MPFR_RNDU);
    return BoundedReal::from_endpoints(std::move(lo), std::move(hi));
}

BoundedReal log(const BoundedReal& x)
{
    if (x.lower().sign() <= 0) {
        throw DomainError("log of an interval that is not strictly positive");
    }
    BigFloat lo(x.lower().precision());
    BigFloat hi(x.upper().precision());
    mpfr_log(lo.get(), x.lower().get(), MPFR_RNDD);
    mpfr_log(hi.get(), x.upper().get(), MPFR_RNDU);
    return BoundedReal::from_endpoints(std::move(lo), std::move(hi));
}

BoundedReal pow(const BoundedReal& x, long k)
{
    if (k < 0) {
        return 1L / pow(x, -k);
    }
    if (k == 0) {
        return BoundedReal(1, x.precision());
    }
    const auto p = x.lower().precision();
    BigFloat lo(p);
    BigFloat hi(p);
    const auto& a = x.lower();
    const auto& b = x.upper();
    if (a.sign() >= 0) {
        mpfr_pow_si(lo.get(), a.get(), k, MPFR_RNDD);
        mpfr_pow_si(hi.get(), b.get(), k, MPFR_RNDU);
    } else if (b.sign() <= 0) {
        if (k % 2 == 0) {
            mpfr_pow_si(lo.get(), b.get(), k, MPFR_RNDD);
            mpfr_pow_si(hi.get(), a.get(), k, MPFR_RNDU);
        } else {
            mpfr_pow_si(lo.get(), a.get(), k, MPFR_RNDD);
            mpfr_pow_si(hi.get(), b.get(), k, MPFR_RNDU);
        }
    } else if (k % 2 == 0) {
        BigFloat na(p);
        mpfr_neg(na.get(), a.get(), MPFR_RNDN);
        const BigFloat& m = na > b ? na : b;
        mpfr_set_zero(lo.get(), 1);
        mpfr_pow_si(hi.get(), m.get(), k, MPFR_RNDU);
    } else {
        mpfr_pow_si(lo.get(), a.get(), k, MPFR_RNDD);
        mpfr_pow_si(hi.get(), b.get(), k, MPFR_RNDU);
    }
    return BoundedReal::from_endpoints(std::move(lo), std::move(hi));
}

BoundedReal pow(const BoundedReal& x, const BoundedReal& y)
{
    if (x.lower().sign() <= 0) {
        throw DomainError("pow: base interval must be strictly positive");
    }
    auto [lo, hi] = corners(mpfr_pow, x, y, joint(x, y));
    return BoundedReal::from_endpoints(std::move(lo), std::move(hi));
}

BoundedReal pow(const BoundedReal& x, const Rational& q)
{
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    if (den == 1 && num.fits_slong_p()) {
        return pow(x, num.get_si());
    }
    if (den == 2 && num.fits_slong_p()) {
        return pow(sqrt(x), num.get_si());
    }
    return pow(x, BoundedReal::from_rational(q, x.precision()));
}

bool definitely_less(const BoundedReal& a, const BoundedReal& b) { return a.upper() < b.lower(); }
bool definitely_greater(const BoundedReal& a, const BoundedReal& b) { return a.lower() > b.upper(); }
bool definitely_at_most(const BoundedReal& a, const BoundedReal& b) { return a.upper() <= b.lower(); }

bool definitely_less(const BoundedReal& a, const Rational& b)
{
    return mpfr_cmp_q(a.upper().get(), b.get_mpq_t()) < 0;
}

bool definitely_greater(const BoundedReal& a, const Rational& b)
{
    return mpfr_cmp_q(a.lower().get(), b.get_mpq_t()) > 0;
}

bool definitely_at_least(const BoundedReal& a, const Rational& b)
{
    return mpfr_cmp_q(a.lower().get(), b.get_mpq_t()) >= 0;
}

Ordering compare_to(const BoundedReal& a, const Rational& b)
{
    if (definitely_less(a, b)) {
        return Ordering::below;
    }
    if (definitely_at_least(a, b)) {
        return Ordering::above;
    }
    return Ordering::undecided;
}

} // namespace crg
