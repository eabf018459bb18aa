#pragma once

#include "trigcert/certifier.hpp"
#include "trigcert/interval.hpp"
#include "trigcert/rational.hpp"

#include <string_view>
#include <vector>

namespace trigcert {

enum class SeqId {
    a_n,               // 4^n |B_2n| / (2n)!
    b_n,               // (4^n - 1) 4^n |B_2n| p^(2n-2) / (2n)!
    ratio_diff,        // closed form of b_{n+1}/a_{n+1} - b_n/a_n
    ratio_diff_direct, // the same difference computed from a_n, b_n
    u_n,               // (4^n - 1)(2n - 10) p^(2n-2) - 3(2n - 1)
    h1_n,              // (3(2n-1) / ((4^n - 1)(2n - 10)))^(1/(2n-2)),  n >= 6
    k_n,               // (3 / (4^n - 1))^(1/(2n-2)),  n >= 2
    s_n,               // positive factor with s_n t_n = n-th coefficient of f_p'
    t_n,               // p - k(n)
};

std::string_view seq_name(SeqId id);
SeqId parse_seq(std::string_view name);
bool is_rational_seq(SeqId id);

/// Exact term. Every rational sequence depends on p only through p^2, so the
/// parameter is p^2 (exact even for p = 1/sqrt(5)).
BigRational eval_seq(SeqId id, unsigned n, const BigRational& p_squared);

/// Enclosure of any term for p in the given interval.
Interval eval_seq_enclosure(SeqId id, unsigned n, const Interval& p);

/// u_n < 0 for every n >= 1 and every p in P.
Certificate certify_seq_negative(const Interval& p);

/// ratio_diff == ratio_diff_direct exactly for n = 1..n_max at each p^2, and
/// the sign pattern (<= 0 for p^2 <= 1/5, > 0 for p^2 >= 1/4).
Certificate certify_ratio_identity(const std::vector<BigRational>& p_squared, unsigned n_max = 50);

} // namespace trigcert
