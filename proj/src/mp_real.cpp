#include "trigcert/mp_real.hpp"

#include "trigcert/errors.hpp"
#include "trigcert/rational.hpp"

#include <atomic>
#include <cstdlib>
#include <memory>

namespace trigcert {

namespace {
std::atomic<long> g_default_precision{256};
}

void MpReal::set_default_precision(mpfr_prec_t bits)
{
    if (bits < MPFR_PREC_MIN || bits > 1 << 20) {
        throw UsageError("MpReal: precision out of range");
    }
    g_default_precision.store(static_cast<long>(bits));
}

mpfr_prec_t MpReal::default_precision() { return static_cast<mpfr_prec_t>(g_default_precision.load()); }

MpReal::MpReal() : MpReal(default_precision()) {}

MpReal::MpReal(mpfr_prec_t precision)
{
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

MpReal::MpReal(double value) : MpReal(default_precision()) { mpfr_set_d(value_, value, MPFR_RNDN); }

MpReal::MpReal(const MpReal& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

MpReal::MpReal(MpReal&& other) noexcept
{
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

MpReal& MpReal::operator=(const MpReal& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

MpReal& MpReal::operator=(MpReal&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

MpReal::~MpReal() { mpfr_clear(value_); }

MpReal MpReal::from_string(const std::string& text, mpfr_rnd_t rnd)
{
    MpReal r;
    if (mpfr_set_str(r.value_, text.c_str(), 10, rnd) != 0) {
        throw UsageError("MpReal: cannot parse '" + text + "'");
    }
    return r;
}

MpReal MpReal::from_rational(const BigRational& q, mpfr_rnd_t rnd)
{
    MpReal r;
    mpfr_set_q(r.value_, q.get_mpq_t(), rnd);
    return r;
}

std::string MpReal::to_string(int digits, mpfr_rnd_t rnd) const
{
    if (mpfr_zero_p(value_)) {
        return "0";
    }
    if (!mpfr_number_p(value_)) {
        return mpfr_nan_p(value_) ? "nan" : (mpfr_sgn(value_) > 0 ? "inf" : "-inf");
    }
    char* raw = nullptr;
    mpfr_asprintf(&raw, (rnd == MPFR_RNDD ? "%.*RDe" : rnd == MPFR_RNDU ? "%.*RUe" : "%.*RNe"), digits - 1, value_);
    std::unique_ptr<char, void (*)(char*)> holder(raw, [](char* p) { mpfr_free_str(p); });
    return std::string(raw);
}

std::string MpReal::to_fixed(int decimals, mpfr_rnd_t rnd) const
{
    if (!mpfr_number_p(value_)) {
        return to_string(1, rnd);
    }
    char* raw = nullptr;
    mpfr_asprintf(&raw, (rnd == MPFR_RNDD ? "%.*RDf" : rnd == MPFR_RNDU ? "%.*RUf" : "%.*RNf"), decimals, value_);
    std::unique_ptr<char, void (*)(char*)> holder(raw, [](char* p) { mpfr_free_str(p); });
    return std::string(raw);
}

MpReal operator-(const MpReal& a)
{
    MpReal r(a.precision());
    mpfr_neg(r.value_, a.value_, MPFR_RNDN);
    return r;
}

} // namespace trigcert
