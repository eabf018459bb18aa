#pragma once

// Closed-form real expressions used by manifests, bound pairs and the
// constants registry, e.g. "sqrt(6)*pi/(2*sqrt(16*sqrt(3) - pi^2))".
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | symbol | name '(' expr ')' | '(' expr ')'
//
// Symbols: pi, e, p1, x0, theta, q, eps. Functions: sqrt, sin, cos, tan, cot,
// exp, ln, log, atan, arctan, acos, arccos.

#include "trigcert/interval.hpp"
#include "trigcert/params.hpp"
#include "trigcert/rational.hpp"

#include <optional>
#include <string>

namespace trigcert {

struct RealValue {
    MpInterval mp;
    std::optional<BigRational> exact;
    std::optional<BigRational> exact_square; // set when the value is sqrt(q), q >= 0 exact

    Interval value() const { return to_double_interval(mp); }
    Scalar to_scalar(const std::string& text = {}) const;
};

/// Throws UsageError (with the column) on malformed input, DomainError on
/// domain violations.
RealValue evaluate_expression(const std::string& text);

/// Convenience wrappers.
Interval expression_interval(const std::string& text);
Scalar expression_scalar(const std::string& text);

/// The root p1 of f_p(pi/2) = 0 and the root x0 of h for p = p1, computed
/// once at the extended tier.
const MpInterval& p1_enclosure();
const MpInterval& x0_enclosure();

} // namespace trigcert
