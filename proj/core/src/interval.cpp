#include "emso/interval.hpp"

#include "emso/error.hpp"

#include <mpfr.h>

#include <algorithm>
#include <vector>

namespace emso {

namespace {

// Exponent bounds may be thread-local in MPFR builds, so widen per thread.
void widen_exponent_range()
{
    thread_local bool done = false;
    if (!done) {
        mpfr_set_emax(mpfr_get_emax_max());
        mpfr_set_emin(mpfr_get_emin_min());
        done = true;
    }
}

} // namespace

struct Interval::Rep
{
    mpfr_t lo;
    mpfr_t hi;

    explicit Rep(long precision)
    {
        if (precision < MPFR_PREC_MIN || precision > MPFR_PREC_MAX) {
            throw InvalidArgument("interval precision out of range");
        }
        widen_exponent_range();
        mpfr_init2(lo, precision);
        mpfr_init2(hi, precision);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
    }
    ~Rep()
    {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    Rep(const Rep&) = delete;
    Rep& operator=(const Rep&) = delete;
};

namespace {

using RepPtr = std::shared_ptr<Interval::Rep>;

RepPtr fresh(long precision)
{
    return std::make_shared<Interval::Rep>(precision);
}

long joint(const Interval& a, const Interval& b)
{
    return std::max(a.precision(), b.precision());
}

void check_nan(const Interval::Rep& r)
{
    if (mpfr_nan_p(r.lo) || mpfr_nan_p(r.hi)) {
        throw InvalidArgument("interval operation produced NaN");
    }
}

Interval wrap(RepPtr r)
{
    check_nan(*r);
    return Interval(std::shared_ptr<const Interval::Rep>(std::move(r)));
}

template <typename Fn>
Interval monotone(const Interval& x, Fn fn)
{
    auto r = fresh(x.precision());
    fn(r->lo, x.rep().lo, MPFR_RNDD);
    fn(r->hi, x.rep().hi, MPFR_RNDU);
    return wrap(std::move(r));
}

} // namespace

Interval::Interval(long precision) : rep_(fresh(precision)) {}

Interval Interval::from_double(double x, long precision)
{
    auto r = fresh(precision);
    mpfr_set_d(r->lo, x, MPFR_RNDD);
    mpfr_set_d(r->hi, x, MPFR_RNDU);
    return wrap(std::move(r));
}

Interval Interval::from_uint(std::uint64_t x, long precision)
{
    auto r = fresh(precision);
    mpfr_set_uj(r->lo, x, MPFR_RNDD);
    mpfr_set_uj(r->hi, x, MPFR_RNDU);
    return wrap(std::move(r));
}

Interval Interval::from_ratio(std::uint64_t num, std::uint64_t den, long precision)
{
    if (den == 0) {
        throw InvalidArgument("ratio with zero denominator");
    }
    return from_uint(num, precision) / from_uint(den, precision);
}

Interval Interval::pow_uint(std::uint64_t base, std::uint64_t exponent, long precision)
{
    if (exponent > static_cast<std::uint64_t>(ULONG_MAX) || base > static_cast<std::uint64_t>(ULONG_MAX)) {
        throw InvalidArgument("pow_uint argument too large");
    }
    auto r = fresh(precision);
    mpfr_ui_pow_ui(r->lo, static_cast<unsigned long>(base), static_cast<unsigned long>(exponent), MPFR_RNDD);
    mpfr_ui_pow_ui(r->hi, static_cast<unsigned long>(base), static_cast<unsigned long>(exponent), MPFR_RNDU);
    if (mpfr_inf_p(r->hi)) {
        throw InvalidArgument("pow_uint overflows the exponent range");
    }
    return wrap(std::move(r));
}

long Interval::precision() const noexcept
{
    return static_cast<long>(mpfr_get_prec(rep_->lo));
}

Interval operator+(const Interval& a, const Interval& b)
{
    auto r = fresh(joint(a, b));
    mpfr_add(r->lo, a.rep().lo, b.rep().lo, MPFR_RNDD);
    mpfr_add(r->hi, a.rep().hi, b.rep().hi, MPFR_RNDU);
    return wrap(std::move(r));
}

Interval operator-(const Interval& a, const Interval& b)
{
    auto r = fresh(joint(a, b));
    mpfr_sub(r->lo, a.rep().lo, b.rep().hi, MPFR_RNDD);
    mpfr_sub(r->hi, a.rep().hi, b.rep().lo, MPFR_RNDU);
    return wrap(std::move(r));
}

Interval Interval::operator-() const
{
    auto r = fresh(precision());
    mpfr_neg(r->lo, rep_->hi, MPFR_RNDD);
    mpfr_neg(r->hi, rep_->lo, MPFR_RNDU);
    return wrap(std::move(r));
}

Interval operator*(const Interval& a, const Interval& b)
{
    const long prec = joint(a, b);
    auto r = fresh(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_srcptr xs[2] = {a.rep().lo, a.rep().hi};
    mpfr_srcptr ys[2] = {b.rep().lo, b.rep().hi};
    bool first = true;
    for (auto* x : xs) {
        for (auto* y : ys) {
            // 0 * inf is taken as 0: endpoints are limits of finite values.
            if ((mpfr_zero_p(x) && mpfr_inf_p(y)) || (mpfr_inf_p(x) && mpfr_zero_p(y))) {
                mpfr_set_zero(t, 1);
                if (first || mpfr_less_p(t, r->lo)) mpfr_set(r->lo, t, MPFR_RNDD);
                if (first || mpfr_greater_p(t, r->hi)) mpfr_set(r->hi, t, MPFR_RNDU);
                first = false;
                continue;
            }
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r->lo)) mpfr_set(r->lo, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r->hi)) mpfr_set(r->hi, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return wrap(std::move(r));
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (mpfr_sgn(b.rep().lo) <= 0 && mpfr_sgn(b.rep().hi) >= 0) {
        throw InvalidArgument("interval division by an interval containing zero");
    }
    const long prec = joint(a, b);
    auto inv = fresh(prec);
    mpfr_ui_div(inv->lo, 1, b.rep().hi, MPFR_RNDD);
    mpfr_ui_div(inv->hi, 1, b.rep().lo, MPFR_RNDU);
    return a * wrap(std::move(inv));
}

Interval log(const Interval& x)
{
    if (mpfr_sgn(x.rep().lo) < 0) {
        throw InvalidArgument("log of an interval with negative points");
    }
    return monotone(x, [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) { mpfr_log(out, in, rnd); });
}

Interval exp(const Interval& x)
{
    return monotone(x, [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) { mpfr_exp(out, in, rnd); });
}

Interval log1p(const Interval& x)
{
    if (mpfr_cmp_si(x.rep().lo, -1) < 0) {
        throw InvalidArgument("log1p of an interval below -1");
    }
    return monotone(x, [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) { mpfr_log1p(out, in, rnd); });
}

Interval floor(const Interval& x)
{
    return monotone(x, [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) { mpfr_rint_floor(out, in, rnd); });
}

bool Interval::certainly_less(const Interval& o) const
{
    return mpfr_less_p(rep_->hi, o.rep().lo) != 0;
}

bool Interval::certainly_less_equal(const Interval& o) const
{
    return mpfr_lessequal_p(rep_->hi, o.rep().lo) != 0;
}

bool Interval::is_point() const
{
    return mpfr_equal_p(rep_->lo, rep_->hi) != 0;
}

double Interval::lower() const
{
    return mpfr_get_d(rep_->lo, MPFR_RNDD);
}

double Interval::upper() const
{
    return mpfr_get_d(rep_->hi, MPFR_RNDU);
}

double Interval::mid() const
{
    mpfr_t t;
    mpfr_init2(t, precision() + 1);
    mpfr_add(t, rep_->lo, rep_->hi, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return d;
}

std::optional<std::uint64_t> Interval::as_uint() const
{
    if (!is_point() || !mpfr_integer_p(rep_->lo) || mpfr_sgn(rep_->lo) < 0 ||
        !mpfr_fits_uintmax_p(rep_->lo, MPFR_RNDN)) {
        return std::nullopt;
    }
    return static_cast<std::uint64_t>(mpfr_get_uj(rep_->lo, MPFR_RNDN));
}

std::string Interval::to_string(int digits) const
{
    auto render = [digits](mpfr_srcptr v, mpfr_rnd_t rnd) {
        std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
        int len = mpfr_snprintf(buf.data(), buf.size(), "%.*R*g", digits, rnd, v);
        if (len >= static_cast<int>(buf.size())) {
            buf.resize(static_cast<std::size_t>(len) + 1);
            mpfr_snprintf(buf.data(), buf.size(), "%.*R*g", digits, rnd, v);
        }
        return std::string(buf.data());
    };
    return "[" + render(rep_->lo, MPFR_RNDD) + ", " + render(rep_->hi, MPFR_RNDU) + "]";
}

} // namespace emso
