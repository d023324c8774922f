#pragma once

#include "capkit/exactint.hpp"

#include <string>

namespace capkit {

enum class Sign { plus, minus };

inline Sign other(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

// Fundamental unit eps_d = (X + Y sqrt(d)) / D of the maximal order of
// Q(sqrt d).  D = 2 can only occur for d = 1 (mod 4), with X, Y both odd;
// the rational coordinates are x = X/D, y = Y/D and X^2 - d Y^2 = norm * D^2.
struct QuadUnit {
    Int d;
    Int X;
    Int Y;
    int D = 1;
    int norm = 1;

    Rational x() const { return Rational(X, D); }
    Rational y() const { return Rational(Y, D); }
    bool half_integral() const { return D == 2; }
    std::string str() const;

    bool operator==(const QuadUnit&) const = default;
};

// Continued-fraction expansion of sqrt(d) with exact (P, Q) state, followed
// by a cube-root descent into Z[(1+sqrt d)/2] when d = 1 (mod 4): the index
// of Z[sqrt d]^* in the maximal order's unit group is 1 or 3, so the
// half-integral unit, when it exists, is recovered from u^3 - 3*norm*u = 2X.
QuadUnit fundamental_unit(const Int& d);

// Independent oracle: scans y = 1/2, 1, 3/2, 2, ... testing X^2 = d Y^2 +- D^2
// and returns the first solution.  Throws bound_exhausted if no solution has
// Y <= y_bound.  Must agree with fundamental_unit whenever it terminates.
QuadUnit fundamental_unit_bruteforce(const Int& d, unsigned long y_bound);

// The exact integer 2(x +- 1); integral for both D = 1 and D = 2.
Int two_x_plus_minus(const QuadUnit& u, Sign sign);

}  // namespace capkit
