#include "trigcert/constants.hpp"

#include <mutex>

namespace trigcert {

std::string_view constant_name(Constant c)
{
    switch (c) {
    case Constant::pi: return "pi";
    case Constant::half_pi: return "pi/2";
    case Constant::e: return "e";
    case Constant::sqrt2: return "sqrt(2)";
    case Constant::sqrt3: return "sqrt(3)";
    case Constant::sqrt5: return "sqrt(5)";
    case Constant::sqrt6: return "sqrt(6)";
    case Constant::ln2: return "ln(2)";
    case Constant::ln_pi: return "ln(pi)";
    }
    return "?";
}

namespace {

void evaluate(Constant c, mpfr_ptr out, mpfr_rnd_t rnd)
{
    switch (c) {
    case Constant::pi: mpfr_const_pi(out, rnd); break;
    case Constant::half_pi:
        mpfr_const_pi(out, rnd);
        mpfr_div_2ui(out, out, 1, rnd);
        break;
    case Constant::e: {
        mpfr_set_ui(out, 1, MPFR_RNDN);
        mpfr_exp(out, out, rnd);
        break;
    }
    case Constant::sqrt2: mpfr_sqrt_ui(out, 2, rnd); break;
    case Constant::sqrt3: mpfr_sqrt_ui(out, 3, rnd); break;
    case Constant::sqrt5: mpfr_sqrt_ui(out, 5, rnd); break;
    case Constant::sqrt6: mpfr_sqrt_ui(out, 6, rnd); break;
    case Constant::ln2: mpfr_const_log2(out, rnd); break;
    case Constant::ln_pi: {
        // log is increasing, so rounding pi and then log in the same direction
        // yields a bound in that direction.
        mpfr_const_pi(out, rnd);
        mpfr_log(out, out, rnd);
        break;
    }
    }
}

MpInterval evaluate_mp(Constant c, long bits)
{
    MpReal lo(static_cast<mpfr_prec_t>(bits));
    MpReal hi(static_cast<mpfr_prec_t>(bits));
    evaluate(c, lo.get(), MPFR_RNDD);
    evaluate(c, hi.get(), MPFR_RNDU);
    return MpInterval(lo, hi);
}

} // namespace

const Interval& ConstantPool::get(Constant c)
{
    static const std::array<Interval, kAllConstants.size()> pool = [] {
        std::array<Interval, kAllConstants.size()> out{};
        for (std::size_t i = 0; i < kAllConstants.size(); ++i) {
            out[i] = get(kAllConstants[i], 256);
        }
        return out;
    }();
    return pool[static_cast<std::size_t>(c)];
}

Interval ConstantPool::get(Constant c, long bits)
{
    return to_double_interval(evaluate_mp(c, bits < 64 ? 64 : bits));
}

MpInterval ConstantPool::get_mp(Constant c)
{
    const long bits = MpReal::default_precision();
    return evaluate_mp(c, bits < 64 ? 64 : bits);
}

Interval ConstantPool::with_width(Constant c, double width)
{
    const Interval& tight = get(c);
    const double half = width / 2;
    return Interval(RoundingTraits<double>::sub(tight.lo(), half, Rounding::down),
                    RoundingTraits<double>::add(tight.hi(), half, Rounding::up));
}

} // namespace trigcert
