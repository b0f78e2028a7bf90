#include "polymom/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include "polymom/json_util.hpp"

namespace polymom {

// Signed d! * volume spanned by rows relative to rows[0].
static Rat signed_det_from_first(const Mat<Rat>& rows) {
    const int d = static_cast<int>(rows.size()) - 1;
    Mat<Rat> m(d, std::vector<Rat>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[i][j] = rows[i + 1][j] - rows[0][j];
    return det_bareiss(m);
}

Rat simplex_volume(const Mat<Rat>& vertex_rows) {
    const int d = static_cast<int>(vertex_rows.size()) - 1;
    if (d < 1) throw validation_error("simplex needs at least 2 vertex rows");
    for (const auto& row : vertex_rows)
        if (static_cast<int>(row.size()) != d)
            throw validation_error("simplex vertex rows must have length d = rows-1");
    Rat det = signed_det_from_first(vertex_rows);
    if (det < 0) det = -det;
    return det / int_factorial(d);
}

std::vector<Rat> vertex_centroid(const Polytope& p) {
    std::vector<Rat> c(p.d, Rat(0));
    for (const auto& v : p.vertices)
        for (int j = 0; j < p.d; ++j) c[j] += v[j];
    for (int j = 0; j < p.d; ++j) c[j] /= p.n();
    return c;
}

// Affine functional of the facet hyperplane: ell(x) = det[x - v1; v2 - v1; ...].
// Returns the value at point x.
static Rat facet_functional(const Polytope& p, const std::vector<int>& facet,
                            const std::vector<Rat>& x) {
    const int d = p.d;
    Mat<Rat> m(d, std::vector<Rat>(d));
    const auto& v1 = p.vertices[facet[0] - 1];
    for (int j = 0; j < d; ++j) m[0][j] = x[j] - v1[j];
    for (int i = 1; i < d; ++i) {
        const auto& vi = p.vertices[facet[i] - 1];
        for (int j = 0; j < d; ++j) m[i][j] = vi[j] - v1[j];
    }
    return det_bareiss(m);
}

void validate_polytope(const Polytope& p) {
    if (p.d < 1) throw validation_error("polytope dimension must be >= 1");
    if (p.n() < p.d + 1) throw validation_error("polytope needs at least d+1 vertices");
    for (const auto& v : p.vertices)
        if (static_cast<int>(v.size()) != p.d)
            throw validation_error("vertex row has wrong length");
    if (p.facets.empty()) throw validation_error("polytope needs a facet list");
    for (const auto& f : p.facets) {
        if (static_cast<int>(f.size()) != p.d)
            throw validation_error("every facet must list exactly d vertices");
        std::set<int> s(f.begin(), f.end());
        if (static_cast<int>(s.size()) != p.d)
            throw validation_error("facet indices must be distinct");
        for (int k : f)
            if (k < 1 || k > p.n())
                throw validation_error("facet index out of range (1-based)");
    }
    // full affine rank: rank of [v_i - v_1] must be d
    Mat<Rat> diff(p.n() - 1, std::vector<Rat>(p.d));
    for (int i = 1; i < p.n(); ++i)
        for (int j = 0; j < p.d; ++j) diff[i - 1][j] = p.vertices[i][j] - p.vertices[0][j];
    Mat<Rat> copy = diff;
    if (static_cast<int>(rref(copy).size()) != p.d)
        throw validation_error("vertices do not affinely span dimension d");
    // centroid strictly off every facet; every vertex weakly on the centroid side
    std::vector<Rat> c = vertex_centroid(p);
    for (const auto& f : p.facets) {
        Rat fc = facet_functional(p, f, c);
        if (fc == 0)
            throw validation_error("vertex centroid lies on a facet hyperplane");
        for (int k = 1; k <= p.n(); ++k) {
            Rat fv = facet_functional(p, f, p.vertices[k - 1]);
            if (fv * fc < 0)
                throw validation_error(
                    "vertices are not in convex position with the given facets");
        }
    }
}

Polytope polytope_from_json_text(const std::string& text) {
    json j = parse_json_text(text, "polytope");
    if (!j.is_object() || !j.contains("d") || !j.contains("vertices") || !j.contains("facets"))
        throw validation_error("polytope JSON needs fields d, vertices, facets");
    Polytope p;
    p.d = j["d"].get<int>();
    for (const auto& row : j["vertices"]) {
        std::vector<Rat> v;
        if (p.d == 1 && row.is_array() && row.size() == 2 && !row[0].is_array()) {
            v.push_back(rat_from_json(row));  // 1-D: a vertex row is one rational pair
        } else {
            for (const auto& x : row) v.push_back(rat_from_json(x));
        }
        p.vertices.push_back(std::move(v));
    }
    for (const auto& f : j["facets"]) {
        std::vector<int> fac;
        for (const auto& k : f) fac.push_back(k.get<int>());
        p.facets.push_back(std::move(fac));
    }
    validate_polytope(p);
    return p;
}

std::string polytope_to_json_text(const Polytope& p) {
    json j;
    j["d"] = p.d;
    json verts = json::array();
    for (const auto& v : p.vertices) {
        json row = json::array();
        for (const auto& x : v) row.push_back(rat_to_json(x));
        verts.push_back(row);
    }
    j["vertices"] = verts;
    j["facets"] = p.facets;
    return j.dump(2);
}

const std::vector<Rat>& vertex_row(const Polytope& p, const Triangulation& t, int k) {
    if (k >= 1 && k <= p.n()) return p.vertices[k - 1];
    int a = k - p.n() - 1;
    if (a >= 0 && a < static_cast<int>(t.aux_vertices.size())) return t.aux_vertices[a];
    throw validation_error("triangulation vertex index out of range");
}

Triangulation star_triangulation(const Polytope& p, const std::vector<Rat>& apex) {
    validate_polytope(p);
    if (static_cast<int>(apex.size()) != p.d)
        throw validation_error("apex has wrong dimension");
    std::vector<Rat> c = vertex_centroid(p);
    for (const auto& f : p.facets) {
        Rat fa = facet_functional(p, f, apex);
        Rat fc = facet_functional(p, f, c);
        if (fa == 0 || fa * fc < 0)
            throw validation_error("star apex must lie strictly inside the polytope");
    }
    for (const auto& v : p.vertices)
        if (v == apex)
            throw validation_error("star apex must not coincide with a vertex");

    Triangulation t;
    t.aux_vertices.push_back(apex);
    t.apex_index = p.n() + 1;
    for (const auto& f : p.facets) {
        std::vector<int> simplex = f;
        simplex.push_back(t.apex_index);
        Mat<Rat> rows;
        for (int k : simplex) rows.push_back(vertex_row(p, t, k));
        Rat vol = simplex_volume(rows);
        if (vol == 0) throw degeneracy_error("star triangulation produced a flat simplex");
        t.simplices.push_back(std::move(simplex));
        t.volumes.push_back(vol);
    }
    return t;
}

Rat polytope_volume(const Polytope& p, const Triangulation& t) {
    (void)p;
    Rat s(0);
    for (const Rat& v : t.volumes) s += v;
    return s;
}

void require_convex_cyclic_quad(const Polytope& q) {
    if (q.d != 2 || q.n() != 4)
        throw validation_error("operation requires a planar quadrilateral (d=2, n=4)");
    for (int i = 0; i < 4; ++i) {
        const auto& a = q.vertices[i];
        const auto& b = q.vertices[(i + 1) % 4];
        const auto& c = q.vertices[(i + 2) % 4];
        Rat cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
        if (cross <= 0)
            throw validation_error(
                "quadrilateral must be convex with counterclockwise cyclic labeling");
    }
}

std::vector<Rat> quad_diagonal_point(const Polytope& q) {
    if (q.d != 2 || q.n() != 4)
        throw validation_error("diagonal point requires d=2, n=4");
    const auto& x1 = q.vertices[0];
    const auto& x2 = q.vertices[1];
    const auto& x3 = q.vertices[2];
    const auto& x4 = q.vertices[3];
    // x1 + s (x3 - x1) = x2 + u (x4 - x2)
    Mat<Rat> A = {{x3[0] - x1[0], x2[0] - x4[0]}, {x3[1] - x1[1], x2[1] - x4[1]}};
    std::vector<Rat> b = {x2[0] - x1[0], x2[1] - x1[1]};
    auto sol = solve_unique(A, b);
    if (!sol) throw degeneracy_error("quadrilateral diagonals are parallel");
    Rat s = (*sol)[0];
    return {x1[0] + s * (x3[0] - x1[0]), x1[1] + s * (x3[1] - x1[1])};
}

std::vector<std::vector<double>> sample_uniform(const Polytope& p, const Triangulation& t,
                                                long count, std::uint64_t seed) {
    if (count < 1) throw validation_error("sample count must be >= 1");
    Rat total(0);
    for (const Rat& v : t.volumes) total += v;
    if (total == 0) throw degeneracy_error("triangulation has zero total volume");
    std::vector<double> cdf;
    Rat acc(0);
    for (const Rat& v : t.volumes) {
        acc += v;
        cdf.push_back(rat_dbl(acc / total));
    }
    cdf.back() = 1.0;

    const int d = p.d;
    Mat<double> verts;  // all rows, original then aux
    for (const auto& v : p.vertices) {
        std::vector<double> row;
        for (const auto& x : v) row.push_back(rat_dbl(x));
        verts.push_back(row);
    }
    for (const auto& v : t.aux_vertices) {
        std::vector<double> row;
        for (const auto& x : v) row.push_back(rat_dbl(x));
        verts.push_back(row);
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<std::vector<double>> out;
    out.reserve(count);
    std::vector<double> w(d + 2);
    for (long s = 0; s < count; ++s) {
        double u = unif(rng);
        size_t pick = std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
        if (pick >= t.simplices.size()) pick = t.simplices.size() - 1;
        const auto& simplex = t.simplices[pick];
        // Dirichlet(1,...,1) weights via normalized exponential spacings
        double tot = 0.0;
        for (int i = 0; i <= d; ++i) {
            double e = -std::log(1.0 - unif(rng));
            w[i] = e;
            tot += e;
        }
        std::vector<double> pt(d, 0.0);
        for (int i = 0; i <= d; ++i) {
            const auto& row = verts[simplex[i] - 1];
            double wi = w[i] / tot;
            for (int j = 0; j < d; ++j) pt[j] += wi * row[j];
        }
        out.push_back(std::move(pt));
    }
    return out;
}

} // namespace polymom
