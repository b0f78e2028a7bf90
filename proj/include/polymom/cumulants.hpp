#pragma once
#include <array>
#include <string>
#include <utility>

#include "polymom/moments.hpp"

namespace polymom {

// Cumulants of a normalized measure on R^d: one exact rational per
// multi-index with 1 <= |I| <= r.  The order-0 cumulant is 0 by convention
// and is never stored.
struct CumulantVector {
    int d = 0;
    int r = 0;
    std::map<MultiIndex, Rat> values;

    const Rat& at(const MultiIndex& I) const;
};

// k_I = [t^I] log(MGF) * I! / (|I|-1)!, with the weight-d series dictionary.
// Requires m normalized (mass 1).
CumulantVector moments_to_cumulants(const MomentVector& m);

// Inverse transform: exponentiate the cumulant series and read moments off
// with weight d.  Exact round trip with moments_to_cumulants.
MomentVector cumulants_to_moments(const CumulantVector& k);

// For the uniform measure on a simplex the cumulants are the power sums of
// the vertices: k_I = sum_j prod_l x_{jl}^{I_l}, computed directly.
CumulantVector powersum_cumulants(const Mat<Rat>& vertices, int r);

// Value of k_I, |I| >= d+2, as a polynomial in the cumulants of order
// <= d+1: the d+1 linear forms <x_j, t> have only d+1 elementary symmetric
// functions, so their higher power-sum layers reduce through Newton's
// identities.  Computed by the symbolic recursion on series, never by
// memorized closed forms.
Rat newton_reduce(const CumulantVector& k_low, const MultiIndex& I);

// Same reduction with the low cumulants left as variables: returns k_I as a
// polynomial in k_J for 1 <= |J| <= d+1, variables ordered by the graded-lex
// enumeration of those J (use newton_reduce_vars for the order).
SparsePoly newton_reduce_symbolic(int d, const MultiIndex& I);
std::vector<MultiIndex> newton_reduce_vars(int d);

// The ten classical quadratic/cubic expressions p01..p34 in the cumulants of
// a planar measure through order 3, in that fixed order.
std::array<std::pair<std::string, Rat>, 10> plucker_from_cumulants(const CumulantVector& k);

CumulantVector cumulant_vector_from_json_text(const std::string& text);
std::string cumulant_vector_to_json_text(const CumulantVector& k);

} // namespace polymom
