#pragma once

#include <vector>

#include "rrmul/curves/function.hpp"

namespace rrmul::curves {

struct RiemannRochBasis {
    Divisor divisor;
    std::vector<Function> basis;
    std::size_t dimension() const { return basis.size(); }
};

/// Basis of L(D) = {f : div(f) + D >= 0}.
RiemannRochBasis riemann_roch_space(const Curve& C, const Divisor& D);
std::size_t rr_dimension(const Curve& C, const Divisor& D);

/// -2 inf on the line, 0 on an elliptic curve.
Divisor canonical_divisor(const Curve& C);

bool is_principal(const Curve& C, const Divisor& D);
bool linearly_equivalent(const Curve& C, const Divisor& A, const Divisor& B);

/// A divisor linearly equivalent to D whose support avoids `avoid`. D itself
/// when its support is already disjoint. Throws std::runtime_error when the
/// curve has too few rational points.
Divisor equivalent_disjoint(const Curve& C, const Divisor& D, const std::vector<ClosedPoint>& avoid);

}  // namespace rrmul::curves
