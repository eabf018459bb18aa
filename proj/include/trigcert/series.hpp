#pragma once

// Exact Bernoulli numbers and the certified power series
//
//   1/x - cot x   = sum_{n>=1} a_n x^(2n-1),           |x| < pi
//   tan x         = sum_{n>=1} (4^n - 1) a_n x^(2n-1),  |x| < pi/2
//   1/sin^2 x - 1/x^2 = sum_{n>=1} (2n - 1) a_n x^(2n-2), |x| < pi
//
// with a_n = 2^(2n) |B_2n| / (2n)! = 2 zeta(2n) / pi^(2n).

#include "trigcert/interval.hpp"
#include "trigcert/rational.hpp"

#include <string_view>
#include <vector>

namespace trigcert {

enum class SeriesKind { cot_defect, tan, csc2_defect };

/// `defect` evaluates the series itself; `full` re-attaches the singular
/// part (cot x, tan x, 1/sin^2 x).
enum class SeriesForm { defect, full };

std::string_view series_kind_name(SeriesKind kind);
SeriesKind parse_series_kind(std::string_view name);

inline constexpr unsigned kDefaultBernoulliCap = 256;
inline constexpr unsigned kDefaultTruncation = 24;
inline constexpr unsigned kMaxTruncation = 192;

/// |B_2n| for 1 <= n <= cap. Thread-safe; the table grows on demand.
BigRational bernoulli_abs(unsigned n);
void set_bernoulli_cap(unsigned cap);
unsigned bernoulli_cap();

/// Exact coefficient of the n-th listed power of the given series.
BigRational series_coeff(SeriesKind kind, unsigned n);
/// Cached outward enclosure of series_coeff(kind, n).
const Interval& series_coeff_interval(SeriesKind kind, unsigned n);

/// Upper bound for zeta(s), s >= 2.
double zeta_upper(unsigned s);

struct CertifiedSeries {
    SeriesKind kind;
    std::vector<BigRational> coefficients; // index 0 holds n = 1
    unsigned truncation_order;
    Interval convergence_radius;
};

CertifiedSeries make_series(SeriesKind kind, unsigned truncation_order = kDefaultTruncation);

/// Radius of convergence (pi or pi/2) as an enclosure.
Interval series_radius(SeriesKind kind);

/// Rigorous tail bound T >= |sum_{n>N} term_n(x)| for |x| <= rho.
Interval series_tail_bound(SeriesKind kind, double rho, unsigned truncation_order);

/// Enclosure of the function over X: partial sum of N terms plus the tail.
Interval eval_enclosed(SeriesKind kind, const Interval& x, unsigned truncation_order = kDefaultTruncation,
                       SeriesForm form = SeriesForm::defect);

/// eval_enclosed with N doubled from the default until the tail is below
/// `tail_goal`, up to kMaxTruncation.
Interval eval_enclosed_adaptive(SeriesKind kind, const Interval& x, double tail_goal,
                                SeriesForm form = SeriesForm::defect);

} // namespace trigcert
