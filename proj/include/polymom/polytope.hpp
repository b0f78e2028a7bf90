#pragma once
#include <random>
#include <string>
#include <vector>
#include "polymom/linalg.hpp"

namespace polymom {

// Simplicial polytope given by vertices and a facet list (1-based indices,
// each facet has exactly d vertices). No hull computation: the combinatorial
// type is part of the input and is validated, not inferred.
struct Polytope {
    int d = 0;
    Mat<Rat> vertices;                    // n rows of length d
    std::vector<std::vector<int>> facets; // 1-based, size-d index sets

    int n() const { return static_cast<int>(vertices.size()); }
};

// Structural and convex-position validation:
// n >= d+1; facet indices distinct and in range; full affine rank; the vertex
// centroid lies strictly off every facet hyperplane; all vertices lie on the
// centroid side or on the facet (convex position, simplicial facets).
void validate_polytope(const Polytope& p);

Polytope polytope_from_json_text(const std::string& text);
std::string polytope_to_json_text(const Polytope& p);

// |det(x_2-x_1, ..., x_{d+1}-x_1)| / d! ; zero for degenerate input.
Rat simplex_volume(const Mat<Rat>& vertex_rows);

// Triangulation of a polytope; simplices reference polytope vertices 1..n and
// possibly auxiliary vertices n+1.. (stored here, e.g. a star apex).
struct Triangulation {
    std::vector<std::vector<int>> simplices; // (d+1)-element, 1-based
    std::vector<Rat> volumes;                // all > 0
    Mat<Rat> aux_vertices;                   // rows for indices n+1, n+2, ...
    int apex_index = 0;                      // >0 when built as a star
};

// Row of vertex k (1-based), looking through p then t.aux_vertices.
const std::vector<Rat>& vertex_row(const Polytope& p, const Triangulation& t, int k);

std::vector<Rat> vertex_centroid(const Polytope& p);

// Star triangulation {apex} * facet for every facet. The apex must be
// strictly interior; it is appended as an auxiliary vertex unless it already
// equals a polytope vertex (which is rejected: a vertex apex degenerates the
// simplices at its own facets).
Triangulation star_triangulation(const Polytope& p, const std::vector<Rat>& apex);

Rat polytope_volume(const Polytope& p, const Triangulation& t);

// Intersection of diagonals x1x3 and x2x4 of a quadrilateral (d=2, n=4,
// cyclic labeling); degeneracy error when parallel.
std::vector<Rat> quad_diagonal_point(const Polytope& q);

// Strict convex cyclic labeling check for quadrilaterals (positive cross
// products, counterclockwise).
void require_convex_cyclic_quad(const Polytope& q);

// count uniform samples: simplex picked by volume weight, point by normalized
// exponential spacings over the d+1 vertices. Deterministic given seed.
std::vector<std::vector<double>> sample_uniform(const Polytope& p, const Triangulation& t,
                                                long count, std::uint64_t seed);

} // namespace polymom
