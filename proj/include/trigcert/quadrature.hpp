#pragma once

#include "trigcert/certifier.hpp"
#include "trigcert/functions.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace trigcert {

struct IntegralTask {
    FnId integrand;
    Params params;
    Interval a;              // lower endpoint enclosure
    Interval b;              // upper endpoint enclosure
    double tolerance = 1e-9; // target width of the result
};

struct IntegralResult {
    Interval enclosure;
    std::size_t cells = 0;
    std::size_t evaluations = 0;
};

/// Throws PrecisionError if the tolerance cannot be met, DomainError on
/// domain violations.
IntegralResult integrate_enclose(const IntegralTask& task, unsigned max_depth = 40);

/// A catalogued estimate lower < value < upper, where value is an integral
/// (affinely transformed: value = offset + scale * integral).
struct BoundPair {
    std::string id;
    std::string lower;  // closed-form expressions
    std::string upper;
    IntegralTask integral;
    std::string offset = "0";
    std::string scale = "1";
    std::string quantity;   // human-readable name of the bounded value
    bool reversed = false;  // expect upper < value < lower instead
};

/// A1(p) for p^2 given exactly, A2(a) and A4(c) for an expression endpoint,
/// A3, A41, A42a, A5, A6, A7.
BoundPair bound_pair(std::string_view bound_id, const std::string& arg = {});
std::vector<std::string> bound_ids();

/// PROVED iff lower < value < upper with certified gaps (the order flipped
/// for reversed pairs). The certificate's enclosure is the value enclosure.
Certificate check_integral_bounds(const BoundPair& pair);

/// Checks a decimal reference value (read as +-1 in its last printed digit)
/// against the closed-form lower/upper of a pair; no quadrature involved.
Certificate check_decimal_bounds(const BoundPair& pair, const std::string& decimal);

/// Interval read from a decimal string as +-1 unit in its last printed digit.
Interval decimal_reading(const std::string& decimal);

} // namespace trigcert
