#pragma once

// Taylor-form enclosures built from jets:
//
//   F(X) in sum_{k<N} F_k(m) (X-m)^k + F_N(X) (X-m)^N
//
// where F_k(m) come from a jet seeded at the midpoint and F_N(X) from a jet
// seeded over the whole cell.

#include "trigcert/interval.hpp"
#include "trigcert/jet.hpp"

#include <cstddef>

namespace trigcert {

inline constexpr std::size_t kTaylorOrder = 5;

template <std::size_t N, class R, class F>
BasicInterval<R> taylor_enclose(F&& f, const BasicInterval<R>& x)
{
    using I = BasicInterval<R>;
    using J = Jet<I, N>;
    const I m(x.mid());
    const J at_mid = f(J::variable(m));
    const J over = f(J::variable(x));
    const I u = x - m;
    I acc = at_mid[0];
    I u_pow(1.0);
    for (std::size_t k = 1; k < N; ++k) {
        u_pow = pow(u, static_cast<long>(k));
        acc = acc + at_mid[k] * u_pow;
    }
    acc = acc + over[N] * pow(u, static_cast<long>(N));
    return acc;
}

/// Integral of F over [lo, hi] (exact endpoints) from the same Taylor form.
template <std::size_t N, class R, class F>
BasicInterval<R> taylor_integrate(F&& f, const R& lo, const R& hi)
{
    using I = BasicInterval<R>;
    using J = Jet<I, N>;
    const I x(lo, hi);
    const I m(x.mid());
    const J at_mid = f(J::variable(m));
    const J over = f(J::variable(x));
    const I a = I(lo) - m; // <= 0
    const I b = I(hi) - m; // >= 0
    I acc(0.0);
    for (std::size_t k = 0; k < N; ++k) {
        const long e = static_cast<long>(k + 1);
        const I moment = (pow(b, e) - pow(a, e)) / I(static_cast<double>(k + 1));
        acc = acc + at_mid[k] * moment;
    }
    // (x-m)^N changes sign on the cell when N is odd, so bound by |x-m|^N.
    const long e = static_cast<long>(N + 1);
    I moment = (pow(b, e) - pow(a, e)) / I(static_cast<double>(N + 1));
    if (N % 2 == 1) {
        const auto ab = pow(hull(-a, b), e) / I(static_cast<double>(N + 1));
        moment = hull(-ab, ab) * I(2.0);
    }
    acc = acc + over[N] * moment;
    return acc;
}

} // namespace trigcert
