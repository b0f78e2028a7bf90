#pragma once
#include "polymom/recovery.hpp"

namespace polymom {

// Piecewise polynomial on consecutive intervals [breaks[k], breaks[k+1]),
// zero outside; the last piece includes its right endpoint.
struct PiecewisePoly {
    std::vector<Rat> breaks;               // ascending
    std::vector<std::vector<Rat>> pieces;  // ascending coefficients per interval
    Rat eval(const Rat& x) const;
    PiecewisePoly derivative() const;
    Rat moment(int i) const;  // integral of x^i * f over the support
};

// B_{j,p} over the ascending distinct knot list; nonzero on
// (knots[j], knots[j+p+1]), represented over all knot intervals.
PiecewisePoly bspline_basis(const std::vector<Rat>& knots, int j, int p);

// Density of the model as a degree d-1 spline on the node knots:
// coefficients solved by exact moment matching, then re-integrated and
// checked against the model moments through max(n-d-1, verify_order).
PiecewisePoly spline_density(const SplineModel& model, int verify_order = -1);

// Largest k <= max_check with all one-sided values of the first k derivatives
// matching at every break (boundary compared against the zero extension);
// -1 when the function itself jumps.
int smoothness_order(const PiecewisePoly& f, int max_check);

} // namespace polymom
