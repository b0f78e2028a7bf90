#pragma once
#include <string>
#include <vector>

#include "polymom/linalg.hpp"
#include "polymom/rat.hpp"

namespace polymom {

// Hankel matrix of an axial moment sequence m_0..m_r for model type (d, n):
// entry(j, l) = c_{j+l} with c_0 = ... = c_{d-1} = 0 and
// c_{i+d} = binom(d+i, d) * m_i.  Shape (n+1) x (r+d-n+1), needs r >= 2n-d.
struct HankelMatrix {
    int d = 0, n = 0, r = 0;
    std::vector<Rat> c;  // c_0 .. c_{r+d}
    Mat<Rat> entries;
};

HankelMatrix build_hankel(const std::vector<Rat>& m1d, int d, int n);

// A recovered node: exact rational, or an exact integer polynomial together
// with an isolating interval (lo, hi) containing exactly one simple real root.
struct Node {
    bool rational = true;
    Rat value;
    std::vector<Rat> minpoly;  // ascending primitive integer coefficients
    Rat lo, hi;
    double approx() const;
    // Halve the isolating interval until its width is <= w (no-op when rational).
    void refine(const Rat& w);
};

// Density model A(t) / prod_j (1 - u_j t) with deg A <= n-d-1 and A(0) = 1:
// the n nodes u_j and the numerator coefficients determine all moments.
struct SplineModel {
    int d = 0;
    std::vector<Node> nodes;     // ascending
    std::vector<Rat> numerator;  // ascending coefficients, numerator[0] = 1
    int n() const { return static_cast<int>(nodes.size()); }
    bool all_rational() const;
};

// Recover the type-(d, n) model from normalized axial moments (m_0 = 1):
// the Hankel left kernel must be one-dimensional; its vector read backwards
// is the node polynomial, whose roots are the nodes (a vanishing trailing
// kernel entry is a node at 0), and the numerator follows by convolution.
SplineModel recover_spline(const std::vector<Rat>& m1d, int d, int n);

struct MinorReport {
    int rows = 0, cols = 0;
    long total = 0;
    long vanishing = 0;
    std::vector<std::vector<int>> nonzero_column_sets;
    bool all_vanish() const { return total == vanishing; }
};

// Evaluate every (n+1) x (n+1) minor of the Hankel matrix exactly.
MinorReport hankel_minor_check(const std::vector<Rat>& m1d, int d, int n);

// Floating-point rank of the Hankel matrix: one-sided Jacobi SVD, counting
// singular values above tol * sigma_max.  For noisy input only; the exact
// path never thresholds.
int hankel_numeric_rank(const HankelMatrix& h, double tol = 1e-8);

// Moments m_0..m_r implied by the model (requires rational nodes).
std::vector<Rat> model_moments(const SplineModel& model, int r);

SplineModel spline_model_from_json_text(const std::string& text);
std::string spline_model_to_json_text(const SplineModel& model);

} // namespace polymom
