#include "polymom/moments.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include "polymom/json_util.hpp"
#include "polymom/linalg.hpp"

namespace polymom {

const Rat& MomentVector::at(const MultiIndex& I) const {
    auto it = values.find(I);
    if (it == values.end())
        throw validation_error("missing moment at index (" + mi_str(I) + ")");
    return it->second;
}

MomentVector MomentVector::normalized() const {
    Rat m0 = mass();
    if (m0 == 0) throw degeneracy_error("cannot normalize a moment vector with zero mass");
    MomentVector out;
    out.d = d;
    out.r = r;
    for (const auto& [I, v] : values) out.values[I] = v / m0;
    return out;
}

bool NonfaceReport::all_pass() const {
    for (const auto& e : entries)
        if (e.status == NonfaceEntry::Status::nonzero) return false;
    return true;
}

static Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// series 1 - <x, t> on the given truncation table
static TruncSeries<Rat> one_minus_linear(const std::shared_ptr<const IndexTable>& tab,
                                         const std::vector<Rat>& x) {
    TruncSeries<Rat> s(tab);
    s.c[0] = 1;
    if (tab->r >= 1) {
        MultiIndex e(tab->d, 0);
        for (int j = 0; j < tab->d; ++j) {
            e[j] = 1;
            s.at(e) = -x[j];
            e[j] = 0;
        }
    }
    return s;
}

// polynomial 1 - <x, t>
static SparsePoly one_minus_linear_poly(int d, const std::vector<Rat>& x) {
    SparsePoly p = SparsePoly::constant(d, Rat(1));
    for (int j = 0; j < d; ++j) p += SparsePoly::variable(d, j) * (-x[j]);
    return p;
}

static void require_point_rows(const Mat<Rat>& rows, int d, const char* what) {
    if (d < 1) throw validation_error(std::string(what) + ": dimension must be >= 1");
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != d)
            throw validation_error(std::string(what) + ": point rows must have length d");
}

TruncSeries<Rat> simplex_mgf(const Mat<Rat>& vertices, int r) {
    if (vertices.empty() || r < 0) throw validation_error("simplex_mgf: bad arguments");
    const int d = static_cast<int>(vertices.size()) - 1;
    require_point_rows(vertices, d, "simplex_mgf");
    if (simplex_volume(vertices) == 0)
        throw degeneracy_error("simplex_mgf: degenerate simplex");
    auto tab = table_for(d, r);
    TruncSeries<Rat> denom(tab);
    denom.c[0] = 1;
    for (const auto& x : vertices) denom = series_mul(denom, one_minus_linear(tab, x));
    return series_inv(denom);
}

MomentVector mgf_to_moments(const TruncSeries<Rat>& s, int p) {
    if (p < 0) throw validation_error("mgf_to_moments: weight must be >= 0");
    MomentVector m;
    m.d = s.d();
    m.r = s.r();
    Int pf = int_factorial(p);
    for (int i = 0; i < s.tab->size(); ++i) {
        const MultiIndex& I = s.tab->idx[i];
        m.values[I] = s.c[i] * rat_make(mi_factorial(I) * pf, int_factorial(mi_total(I) + p));
    }
    return m;
}

TruncSeries<Rat> moments_to_mgf(const MomentVector& m, int p) {
    if (p < 0) throw validation_error("moments_to_mgf: weight must be >= 0");
    TruncSeries<Rat> s(m.d, m.r);
    Int pf = int_factorial(p);
    for (int i = 0; i < s.tab->size(); ++i) {
        const MultiIndex& I = s.tab->idx[i];
        s.c[i] = m.at(I) * rat_make(int_factorial(mi_total(I) + p), mi_factorial(I) * pf);
    }
    return s;
}

Rat simplex_moment_direct(const Mat<Rat>& vertices, const MultiIndex& I) {
    const int d = static_cast<int>(I.size());
    if (static_cast<int>(vertices.size()) != d + 1)
        throw validation_error("simplex_moment_direct: need d+1 vertex rows");
    require_point_rows(vertices, d, "simplex_moment_direct");
    for (int v : I)
        if (v < 0) throw validation_error("simplex_moment_direct: negative exponent");
    if (simplex_volume(vertices) == 0)
        throw degeneracy_error("simplex_moment_direct: degenerate simplex");

    // Column j distributes I_j over the d+1 vertices; iterate the cartesian
    // product of the per-column compositions with an odometer.
    std::vector<std::vector<MultiIndex>> cols(d);
    for (int j = 0; j < d; ++j) {
        auto tab = table_for(d + 1, I[j]);
        for (const auto& c : tab->idx)
            if (mi_total(c) == I[j]) cols[j].push_back(c);
    }
    std::vector<size_t> pick(d, 0);
    Rat sum(0);
    bool done = false;
    MultiIndex row(d);
    while (!done) {
        Rat term(1);
        for (int k = 0; k <= d; ++k) {
            for (int j = 0; j < d; ++j) row[j] = cols[j][pick[j]][k];
            term *= Rat(int_multinomial(row));
            if (term == 0) break;
            for (int j = 0; j < d; ++j)
                if (row[j] != 0) term *= rat_pow(vertices[k][j], row[j]);
        }
        sum += term;
        done = true;
        for (int j = 0; j < d; ++j) {
            if (++pick[j] < cols[j].size()) {
                done = false;
                break;
            }
            pick[j] = 0;
        }
    }
    return sum * rat_make(mi_factorial(I) * int_factorial(d), int_factorial(mi_total(I) + d));
}

static void check_triangulation(const Polytope& p, const Triangulation& t) {
    if (t.simplices.empty() || t.simplices.size() != t.volumes.size())
        throw validation_error("triangulation is empty or inconsistent");
    const int top = p.n() + static_cast<int>(t.aux_vertices.size());
    for (const auto& s : t.simplices) {
        if (static_cast<int>(s.size()) != p.d + 1)
            throw validation_error("triangulation simplex has wrong vertex count");
        for (int k : s)
            if (k < 1 || k > top) throw validation_error("triangulation vertex index out of range");
    }
    for (const auto& v : t.volumes)
        if (v <= 0) throw validation_error("triangulation simplex volumes must be positive");
}

MomentVector polytope_moments(const Polytope& p, const Triangulation& t, int r) {
    validate_polytope(p);
    check_triangulation(p, t);
    Rat volP = polytope_volume(p, t);
    auto tab = table_for(p.d, r);
    MomentVector out;
    out.d = p.d;
    out.r = r;
    for (const auto& I : tab->idx) out.values[I] = Rat(0);
    for (size_t s = 0; s < t.simplices.size(); ++s) {
        Mat<Rat> rows;
        for (int k : t.simplices[s]) rows.push_back(vertex_row(p, t, k));
        MomentVector ms = mgf_to_moments(simplex_mgf(rows, r), p.d);
        Rat w = t.volumes[s] / volP;
        for (auto& [I, v] : out.values) v += w * ms.values[I];
    }
    return out;
}

// exact quotient N / (1 - <c, t>); throws when the division does not come out
static SparsePoly divide_one_minus_linear(const SparsePoly& N, const std::vector<Rat>& c) {
    const int d = N.nvars;
    SparsePoly L(d);  // <c, t>
    for (int j = 0; j < d; ++j) L += SparsePoly::variable(d, j) * c[j];
    if (L.is_zero()) return N;
    const int cap = std::max(N.total_degree(), 0);
    SparsePoly q = N, pw = N;
    for (int k = 1; k <= cap; ++k) {
        pw = pw.mul_truncated(L, cap);
        if (pw.is_zero()) break;
        q += pw;
    }
    SparsePoly check = q * (SparsePoly::constant(d, Rat(1)) - L);
    if (!(check == N))
        throw degeneracy_error("adjoint numerator is not divisible by the apex factor");
    return q;
}

SparsePoly adjoint_poly(const Polytope& p, const Triangulation& t) {
    validate_polytope(p);
    check_triangulation(p, t);
    const int n = p.n(), d = p.d;
    for (const auto& s : t.simplices)
        for (int k : s)
            if (k > n && k != t.apex_index)
                throw validation_error(
                    "adjoint requires a triangulation by polytope vertices or a star");
    Rat volP = polytope_volume(p, t);
    SparsePoly N(d);
    for (size_t s = 0; s < t.simplices.size(); ++s) {
        std::set<int> used(t.simplices[s].begin(), t.simplices[s].end());
        SparsePoly f = SparsePoly::constant(d, t.volumes[s] / volP);
        for (int k = 1; k <= n; ++k)
            if (!used.count(k)) f = f * one_minus_linear_poly(d, p.vertices[k - 1]);
        N += f;
    }
    if (t.apex_index > n) N = divide_one_minus_linear(N, vertex_row(p, t, t.apex_index));
    if (N.constant_value() != 1)
        throw degeneracy_error("adjoint normalization failed");
    if (N.total_degree() > n - d - 1)
        throw degeneracy_error("adjoint degree exceeds n - d - 1");
    return N;
}

static bool subset_of_some_facet(const Polytope& p, const std::vector<int>& s) {
    for (const auto& f : p.facets) {
        bool all = true;
        for (int k : s)
            if (std::find(f.begin(), f.end(), k) == f.end()) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

NonfaceReport nonface_vanishing_check(const Polytope& p, const SparsePoly& ad) {
    validate_polytope(p);
    const int n = p.n(), d = p.d;
    if (ad.nvars != d && !ad.is_zero())
        throw validation_error("adjoint arity does not match the polytope dimension");
    for (int k = 1; k <= n; ++k)
        if (!subset_of_some_facet(p, {k}))
            throw validation_error("vertex " + std::to_string(k) + " lies on no facet");

    // Minimal non-faces of size 2..d: the subset is in no facet while every
    // proper subset of size >= 2 is.
    std::vector<std::vector<int>> minimal;
    for (int size = 2; size <= d; ++size) {
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i + 1;
        while (true) {
            if (!subset_of_some_facet(p, comb)) {
                bool proper_ok = true;
                if (size > 2) {
                    std::vector<int> sub(size - 1);
                    for (int skip = 0; skip < size && proper_ok; ++skip) {
                        int w = 0;
                        for (int i = 0; i < size; ++i)
                            if (i != skip) sub[w++] = comb[i];
                        if (!subset_of_some_facet(p, sub)) proper_ok = false;
                    }
                }
                if (proper_ok) minimal.push_back(comb);
            }
            int i = size - 1;
            while (i >= 0 && comb[i] == n - size + i + 1) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }

    NonfaceReport rep;
    for (const auto& tau : minimal) {
        NonfaceEntry entry;
        entry.subset = tau;
        // solution set of {<x_k, t> = 1 : k in tau}
        Mat<Rat> m(tau.size(), std::vector<Rat>(d + 1));
        for (size_t row = 0; row < tau.size(); ++row) {
            for (int j = 0; j < d; ++j) m[row][j] = p.vertices[tau[row] - 1][j];
            m[row][d] = 1;
        }
        std::vector<int> piv = rref(m);
        bool inconsistent = !piv.empty() && piv.back() == d;
        if (inconsistent) {
            entry.status = NonfaceEntry::Status::vacuous;
            rep.entries.push_back(entry);
            continue;
        }
        std::vector<bool> is_piv(d, false);
        for (int c : piv) is_piv[c] = true;
        std::vector<int> free_cols;
        for (int j = 0; j < d; ++j)
            if (!is_piv[j]) free_cols.push_back(j);
        std::vector<Rat> t0(d, Rat(0));
        for (size_t row = 0; row < piv.size(); ++row) t0[piv[row]] = m[row][d];
        if (free_cols.empty()) {
            entry.status = ad.eval(t0) == 0 ? NonfaceEntry::Status::vanishes
                                            : NonfaceEntry::Status::nonzero;
        } else {
            const int nf = static_cast<int>(free_cols.size());
            std::vector<SparsePoly> args;
            for (int j = 0; j < d; ++j) {
                SparsePoly a = SparsePoly::constant(nf, t0[j]);
                for (int i = 0; i < nf; ++i) {
                    if (free_cols[i] == j) {
                        a += SparsePoly::variable(nf, i);
                    } else if (is_piv[j]) {
                        // locate the pivot row of column j
                        for (size_t row = 0; row < piv.size(); ++row)
                            if (piv[row] == j) {
                                a += SparsePoly::variable(nf, i) * (-m[row][free_cols[i]]);
                                break;
                            }
                    }
                }
                args.push_back(a);
            }
            SparsePoly restricted = ad.compose(args, nf);
            entry.status = restricted.is_zero() ? NonfaceEntry::Status::vanishes
                                                : NonfaceEntry::Status::nonzero;
        }
        rep.entries.push_back(entry);
    }
    return rep;
}

std::vector<Rat> wachspress_coords(const Polytope& p, const std::vector<Rat>& point) {
    validate_polytope(p);
    if (static_cast<int>(point.size()) != p.d)
        throw validation_error("evaluation point has wrong dimension");
    Triangulation star;
    try {
        star = star_triangulation(p, std::vector<Rat>(p.d, Rat(0)));
    } catch (const validation_error&) {
        throw validation_error(
            "facet coordinates require the origin strictly inside the polytope");
    }
    Rat volP = polytope_volume(p, star);
    SparsePoly ad = adjoint_poly(p, star);
    Rat denom = ad.eval(point);
    if (denom == 0)
        throw degeneracy_error("adjoint vanishes at the evaluation point");
    Int dfact = int_factorial(p.d);
    std::vector<Rat> out;
    Rat total(0);
    for (const auto& f : p.facets) {
        Mat<Rat> rows;
        for (int k : f) rows.push_back(p.vertices[k - 1]);
        Rat beta = det_bareiss(rows);
        if (beta < 0) beta = -beta;
        beta /= Rat(dfact) * volP;
        Rat val = beta;
        for (int k = 1; k <= p.n(); ++k) {
            if (std::find(f.begin(), f.end(), k) != f.end()) continue;
            val *= Rat(1) - dot(p.vertices[k - 1], point);
        }
        val /= denom;
        total += val;
        out.push_back(val);
    }
    if (total != 1) throw degeneracy_error("facet coordinates failed to sum to 1");
    return out;
}

TruncSeries<Rat> quad_mgf(const Polytope& q, int r) {
    require_convex_cyclic_quad(q);
    if (r < 0) throw validation_error("quad_mgf: order must be >= 0");
    std::vector<Rat> delta = quad_diagonal_point(q);
    auto tab = table_for(2, r);
    TruncSeries<Rat> denom(tab);
    denom.c[0] = 1;
    for (const auto& x : q.vertices) denom = series_mul(denom, one_minus_linear(tab, x));
    return series_mul(series_inv(denom), one_minus_linear(tab, delta));
}

MomentVector canonical_spline_moments(const Mat<Rat>& xs, int r) {
    if (xs.empty() || r < 0) throw validation_error("canonical_spline_moments: bad arguments");
    const int d = static_cast<int>(xs[0].size());
    require_point_rows(xs, d, "canonical_spline_moments");
    const int n = static_cast<int>(xs.size());
    if (n < d + 1)
        throw validation_error("canonical_spline_moments: need at least d+1 directions");
    auto tab = table_for(d, r);
    TruncSeries<Rat> denom(tab);
    denom.c[0] = 1;
    for (const auto& x : xs) denom = series_mul(denom, one_minus_linear(tab, x));
    return mgf_to_moments(series_inv(denom), n - 1);
}

std::vector<Rat> project_moments(const MomentVector& m, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != m.d)
        throw validation_error("projection direction has wrong dimension");
    auto tab = table_for(m.d, m.r);
    std::vector<Rat> out(m.r + 1, Rat(0));
    for (const auto& I : tab->idx) {
        Rat term = m.at(I) * rat_make(int_factorial(mi_total(I)), mi_factorial(I));
        for (int j = 0; j < m.d; ++j)
            if (I[j] != 0) term *= rat_pow(v[j], I[j]);
        out[mi_total(I)] += term;
    }
    return out;
}

MomentVector transform_moments(const MomentVector& m, const AffineMap& map) {
    const int d = m.d;
    if (static_cast<int>(map.b.size()) != d || static_cast<int>(map.A.size()) != d)
        throw validation_error("affine map has wrong dimensions");
    for (const auto& row : map.A)
        if (static_cast<int>(row.size()) != d)
            throw validation_error("affine map has wrong dimensions");
    if (det_bareiss(map.A) == 0)
        throw validation_error("affine map must be invertible");

    std::vector<SparsePoly> lin;  // row l of A x + b as a polynomial in x
    for (int l = 0; l < d; ++l) {
        SparsePoly f = SparsePoly::constant(d, map.b[l]);
        for (int j = 0; j < d; ++j) f += SparsePoly::variable(d, j) * map.A[l][j];
        lin.push_back(f);
    }
    auto tab = table_for(d, m.r);
    MomentVector out;
    out.d = d;
    out.r = m.r;
    for (const auto& I : tab->idx) {
        SparsePoly poly = SparsePoly::constant(d, Rat(1));
        for (int l = 0; l < d; ++l)
            for (int e = 0; e < I[l]; ++e) poly = poly * lin[l];
        Rat v(0);
        for (const auto& [J, c] : poly.terms) v += c * m.at(J);
        out.values[I] = v;
    }
    return out;
}

MonteCarloMoments monte_carlo_moments(const Polytope& p, const Triangulation& t,
                                      int r, long samples, std::uint64_t seed) {
    if (r < 0) throw validation_error("monte_carlo_moments: order must be >= 0");
    auto pts = sample_uniform(p, t, samples, seed);
    auto tab = table_for(p.d, r);
    const int nidx = tab->size();
    std::vector<double> s1(nidx, 0.0), s2(nidx, 0.0);
    std::vector<std::vector<double>> powc(p.d, std::vector<double>(r + 1, 1.0));
    for (const auto& x : pts) {
        for (int j = 0; j < p.d; ++j)
            for (int e = 1; e <= r; ++e) powc[j][e] = powc[j][e - 1] * x[j];
        for (int i = 0; i < nidx; ++i) {
            double v = 1.0;
            const MultiIndex& I = tab->idx[i];
            for (int j = 0; j < p.d; ++j) v *= powc[j][I[j]];
            s1[i] += v;
            s2[i] += v * v;
        }
    }
    MonteCarloMoments out;
    out.d = p.d;
    out.r = r;
    out.samples = samples;
    out.seed = seed;
    const double n = static_cast<double>(samples);
    for (int i = 0; i < nidx; ++i) {
        double mean = s1[i] / n;
        double var = std::max(0.0, s2[i] / n - mean * mean);
        out.mean[tab->idx[i]] = mean;
        out.se[tab->idx[i]] = std::sqrt(var / n);
    }
    return out;
}

MomentVector moment_vector_from_json_text(const std::string& text) {
    json j = parse_json_text(text, "moment vector");
    if (!j.is_object() || !j.contains("d") || !j.contains("r") || !j.contains("values"))
        throw validation_error("moment vector JSON needs fields d, r, values");
    if (!j["d"].is_number_integer() || !j["r"].is_number_integer() || !j["values"].is_object())
        throw validation_error("moment vector JSON has wrong field types");
    MomentVector m;
    m.d = j["d"].get<int>();
    m.r = j["r"].get<int>();
    if (m.d < 1 || m.d > 16 || m.r < 0 || m.r > 64)
        throw validation_error("moment vector dimensions out of supported range");
    for (const auto& [key, val] : j["values"].items())
        m.values[parse_index_key(key, m.d, m.r)] = rat_from_json(val);
    auto tab = table_for(m.d, m.r);
    for (const auto& I : tab->idx)
        if (!m.values.count(I))
            throw validation_error("missing moment at index (" + mi_str(I) + ")");
    return m;
}

std::string moment_vector_to_json_text(const MomentVector& m) {
    json j;
    j["d"] = m.d;
    j["r"] = m.r;
    json vals = json::object();
    auto tab = table_for(m.d, m.r);
    for (const auto& I : tab->idx) vals[mi_str(I)] = rat_to_json(m.at(I));
    j["values"] = vals;
    return j.dump(2);
}

std::string moment_vector_to_csv_text(const MomentVector& m, int decimal_digits) {
    std::string out = "index,numerator,denominator,decimal\n";
    auto tab = table_for(m.d, m.r);
    for (const auto& I : tab->idx) {
        const Rat& v = m.at(I);
        out += '"' + mi_str(I) + "\"," + v.get_num().get_str() + ',' +
               v.get_den().get_str() + ',' + rat_decimal(v, decimal_digits) + '\n';
    }
    return out;
}

AffineMap affine_map_from_json_text(const std::string& text, int d) {
    json j = parse_json_text(text, "affine map");
    if (!j.is_object() || !j.contains("A") || !j.contains("b"))
        throw validation_error("affine map JSON needs fields A, b");
    if (!j["A"].is_array() || !j["b"].is_array())
        throw validation_error("affine map JSON has wrong field types");
    AffineMap map;
    for (const auto& row : j["A"]) {
        if (!row.is_array()) throw validation_error("affine map row must be an array");
        std::vector<Rat> rr;
        for (const auto& x : row) rr.push_back(rat_from_json(x));
        map.A.push_back(std::move(rr));
    }
    for (const auto& x : j["b"]) map.b.push_back(rat_from_json(x));
    if (static_cast<int>(map.A.size()) != d || static_cast<int>(map.b.size()) != d)
        throw validation_error("affine map JSON has wrong dimensions");
    for (const auto& row : map.A)
        if (static_cast<int>(row.size()) != d)
            throw validation_error("affine map JSON has wrong dimensions");
    return map;
}

} // namespace polymom
