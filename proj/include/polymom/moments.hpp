#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polymom/multi_index.hpp"
#include "polymom/polytope.hpp"
#include "polymom/series.hpp"
#include "polymom/sparse_poly.hpp"

namespace polymom {

// Truncated moment vector of a measure on R^d: one exact rational per
// multi-index with |I| <= r, including the mass at index 0.
struct MomentVector {
    int d = 0;
    int r = 0;
    std::map<MultiIndex, Rat> values;

    const Rat& at(const MultiIndex& I) const;
    Rat mass() const { return at(MultiIndex(d, 0)); }
    bool is_normalized() const { return mass() == 1; }
    MomentVector normalized() const;
};

struct AffineMap {
    Mat<Rat> A;          // d x d, invertible
    std::vector<Rat> b;  // translation
};

struct NonfaceEntry {
    enum class Status { vanishes, nonzero, vacuous };
    std::vector<int> subset;  // 1-based vertex ids, ascending
    Status status = Status::nonzero;
};

struct NonfaceReport {
    std::vector<NonfaceEntry> entries;
    bool all_pass() const;
};

struct MonteCarloMoments {
    int d = 0;
    int r = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    std::map<MultiIndex, double> mean;
    std::map<MultiIndex, double> se;  // standard error of each mean
};

// Moment generating series of the normalized uniform measure on a
// d-simplex: prod_k 1/(1 - <x_k, t>) truncated at total degree r.
// `vertices` holds d+1 rows of length d.
TruncSeries<Rat> simplex_mgf(const Mat<Rat>& vertices, int r);

// Series <-> moments under the weight-p dictionary
//   [t^I] series = (|I|+p)! / (I! p!) * m_I.
// Uniform measures on d-polytopes use p = d; the canonical spline with n
// directions uses p = n-1.
MomentVector mgf_to_moments(const TruncSeries<Rat>& s, int p);
TruncSeries<Rat> moments_to_mgf(const MomentVector& m, int p);

// Single normalized simplex moment by direct summation over vertex
// exponent matrices (no series expansion).
Rat simplex_moment_direct(const Mat<Rat>& vertices, const MultiIndex& I);

// Normalized moments of the uniform measure on a triangulated polytope:
// volume-weighted mixture of the simplex moments.
MomentVector polytope_moments(const Polytope& p, const Triangulation& t, int r);

// Adjoint polynomial of a simplicial polytope, normalized so Ad(0) = 1:
// the numerator of sum_sigma w_sigma / prod_{k in sigma}(1 - <x_k, t>)
// over the common denominator prod_{k in V(P)}(1 - <x_k, t>).  With an
// auxiliary apex c the star numerator carries a spurious (1 - <c, t>)
// factor which is divided out exactly.
SparsePoly adjoint_poly(const Polytope& p, const Triangulation& t);

// For every minimal non-face tau (|tau| <= d), restrict `ad` to the
// solution set of {<x_k, t> = 1 : k in tau} and report whether it
// vanishes there.  An empty solution set is reported as vacuous.
NonfaceReport nonface_vanishing_check(const Polytope& p, const SparsePoly& ad);

// Facet-indexed barycentric coordinates of `point` (requires the origin
// strictly interior): beta_rho * prod_{k not in rho}(1 - <x_k, point>) / Ad(point),
// one value per facet in input order.  They sum to 1 exactly.
std::vector<Rat> wachspress_coords(const Polytope& p, const std::vector<Rat>& point);

// MGF of a convex quadrilateral with vertices in cyclic order:
// (1 - <delta, t>) * prod_{k=1}^{4} 1/(1 - <x_k, t>), delta the
// intersection of the diagonals.
TruncSeries<Rat> quad_mgf(const Polytope& q, int r);

// Moments of the canonical simplicial spline with directions x_1..x_n
// (rows of xs, n >= d+1): series prod_k 1/(1 - <x_k, t>) with weight n-1.
MomentVector canonical_spline_moments(const Mat<Rat>& xs, int r);

// Moments of the pushforward along x -> <v, x>:
// out[i] = sum_{|I| = i} (i!/I!) v^I m_I, i = 0..r.
std::vector<Rat> project_moments(const MomentVector& m, const std::vector<Rat>& v);

// Moments of the pushforward along x -> A x + b (A invertible).
MomentVector transform_moments(const MomentVector& m, const AffineMap& map);

// Seeded Monte-Carlo estimate of all moments with |I| <= r.
MonteCarloMoments monte_carlo_moments(const Polytope& p, const Triangulation& t,
                                      int r, long samples, std::uint64_t seed);

MomentVector moment_vector_from_json_text(const std::string& text);
std::string moment_vector_to_json_text(const MomentVector& m);
std::string moment_vector_to_csv_text(const MomentVector& m, int decimal_digits = 17);

AffineMap affine_map_from_json_text(const std::string& text, int d);

} // namespace polymom
