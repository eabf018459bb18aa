#pragma once

#include "trigcert/interval.hpp"

#include <array>
#include <string_view>

namespace trigcert {

enum class Constant { pi, half_pi, e, sqrt2, sqrt3, sqrt5, sqrt6, ln2, ln_pi };

inline constexpr std::array<Constant, 9> kAllConstants = {Constant::pi,    Constant::half_pi, Constant::e,
                                                          Constant::sqrt2, Constant::sqrt3,   Constant::sqrt5,
                                                          Constant::sqrt6, Constant::ln2,     Constant::ln_pi};

std::string_view constant_name(Constant c);

/// Enclosure of a named constant, computed with MPFR at `bits` of precision
/// (at least 64) and rounded outward to the requested tier.
///
/// The double-tier pool is computed once and cached; the default double
/// enclosures are the two neighbouring doubles of each constant.
class ConstantPool {
public:
    static const Interval& get(Constant c);
    static Interval get(Constant c, long bits);
    static MpInterval get_mp(Constant c);
    /// A deliberately widened enclosure whose width is at least `width`.
    static Interval with_width(Constant c, double width);
};

template <class R>
BasicInterval<R> constant(Constant c)
{
    if constexpr (std::is_same_v<R, double>) {
        return ConstantPool::get(c);
    } else {
        return ConstantPool::get_mp(c);
    }
}

} // namespace trigcert
