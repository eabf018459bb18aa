#pragma once

// Power series in t = x^2,
//
//   S(t) = sum_{k=0}^{K} d_k t^k + sum_{k>K} d_k t^k,
//
// with the unknown tail coefficients bounded by |d_k| <= sum_j M_j / R_j^k.
// Coefficients are kept exact when every contributing piece is rational, so
// cancellations such as the vanishing x^2 term of f_p are detected exactly.

#include "trigcert/interval.hpp"
#include "trigcert/params.hpp"
#include "trigcert/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace trigcert {

inline constexpr std::size_t kEvenSeriesOrder = 16;

struct SeriesTailTerm {
    double m; // upper bound
    double r; // lower bound, > 0
};

class EvenSeries {
public:
    struct Coeff {
        Interval value;
        std::optional<BigRational> exact;
    };

    explicit EvenSeries(std::size_t order = kEvenSeriesOrder);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Coeff& coeff(std::size_t k) const { return coeffs_.at(k); }
    const std::vector<SeriesTailTerm>& tails() const { return tails_; }

    void set(std::size_t k, const BigRational& q);
    void set(std::size_t k, const Interval& v);
    void add_tail(SeriesTailTerm t) { tails_.push_back(t); }

    EvenSeries& operator+=(const EvenSeries& o);
    EvenSeries operator-() const;
    friend EvenSeries operator+(EvenSeries a, const EvenSeries& b) { return a += b; }
    friend EvenSeries operator-(EvenSeries a, const EvenSeries& b) { return a += -b; }

    EvenSeries scaled(const Scalar& factor) const;
    EvenSeries scaled(const BigRational& factor) const;

    /// Series of x * dS/dx: coefficients 2k d_k, tails (M, R/2).
    EvenSeries x_ddx() const;

    /// First index whose coefficient is not exactly zero.
    std::optional<std::size_t> leading_index() const;

    /// S(t) / t^shift over t in T (T >= 0). Coefficients below `shift` must
    /// be exactly zero.
    Interval eval_scaled(const Interval& t, std::size_t shift = 0) const;
    Interval eval(const Interval& t) const { return eval_scaled(t, 0); }

    /// Integral of S(x^2) over x in [0, delta].
    Interval integrate(const Interval& delta) const;

private:
    std::vector<Coeff> coeffs_;
    std::vector<SeriesTailTerm> tails_;
};

namespace even_series {

/// ln(sin x / x)
EvenSeries log_sinc(std::size_t order = kEvenSeriesOrder);
/// factor * ln cos(px) / p^2, i.e. r ln cos(px) when factor = r p^2.
EvenSeries log_cos(const Scalar& p, const Scalar& factor, std::size_t order = kEvenSeriesOrder);
/// factor * t
EvenSeries monomial_t(const BigRational& factor, std::size_t order = kEvenSeriesOrder);
/// ln((2 + cos x) / 3)
EvenSeries log_cusa(std::size_t order = kEvenSeriesOrder);
/// ln(1 - x^2/3)
EvenSeries log_one_minus_t_over_3(std::size_t order = kEvenSeriesOrder);
/// sin x / x
EvenSeries sinc(std::size_t order = kEvenSeriesOrder);
/// x / sin x
EvenSeries x_over_sin(std::size_t order = kEvenSeriesOrder);
/// x^2 / sin^2 x
EvenSeries x2_over_sin2(std::size_t order = kEvenSeriesOrder);

} // namespace even_series

} // namespace trigcert
