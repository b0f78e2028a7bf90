#include "polymom/recovery.hpp"

#include <algorithm>
#include <cmath>
#include "polymom/json_util.hpp"
#include "polymom/series.hpp"

namespace polymom {

// ---- univariate polynomials as ascending coefficient vectors ----

using UPoly = std::vector<Rat>;

static void u_trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

static int u_deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

static Rat u_eval(const UPoly& p, const Rat& x) {
    Rat v(0);
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

static UPoly u_derivative(const UPoly& p) {
    UPoly out;
    for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rat(static_cast<long>(i)));
    return out;
}

static void u_make_primitive(UPoly& p) {
    u_trim(p);
    if (p.empty()) return;
    Int den_lcm(1), num_gcd(0);
    for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                    c.get_den().get_mpz_t());
    for (const auto& c : p) {
        Int n = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rat f = rat_make(den_lcm, num_gcd);  // positive, so signs are preserved
    for (auto& c : p) c *= f;
}

static UPoly u_rem(UPoly a, const UPoly& b) {
    if (b.empty()) throw validation_error("internal: polynomial division by zero");
    u_trim(a);
    while (u_deg(a) >= u_deg(b)) {
        Rat f = a.back() / b.back();
        int shift = u_deg(a) - u_deg(b);
        for (int i = 0; i <= u_deg(b); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        u_trim(a);
    }
    return a;
}

static std::vector<UPoly> sturm_chain(UPoly p) {
    std::vector<UPoly> s;
    u_make_primitive(p);
    s.push_back(p);
    UPoly dp = u_derivative(p);
    u_trim(dp);
    if (dp.empty()) return s;
    u_make_primitive(dp);
    s.push_back(dp);
    while (u_deg(s.back()) >= 1) {
        UPoly r = u_rem(s[s.size() - 2], s.back());
        u_trim(r);
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        u_make_primitive(r);
        s.push_back(std::move(r));
    }
    return s;
}

static int sign_variations(const std::vector<UPoly>& chain, const Rat& x) {
    int var = 0, last = 0;
    for (const auto& p : chain) {
        int s = sgn(u_eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

// number of distinct real roots in (a, b]
static long roots_in(const std::vector<UPoly>& chain, const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

static Rat cauchy_bound(const UPoly& p) {
    Rat m(0);
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Rat a = abs(p[i] / p.back());
        if (a > m) m = a;
    }
    return m + 2;
}

static std::vector<Int> divisors_of(const Int& zin) {
    Int z = abs(zin);
    if (z == 0) throw validation_error("internal: divisor enumeration of zero");
    Int root = sqrt(z);
    if (root > 20000000)
        throw validation_error(
            "node polynomial coefficients too large for exact rational root search");
    std::vector<Int> out;
    unsigned long lim = root.get_ui();
    for (unsigned long i = 1; i <= lim; ++i) {
        if (mpz_divisible_ui_p(z.get_mpz_t(), i)) {
            out.emplace_back(Int(i));
            Int q = z / Int(i);
            if (q != Int(i)) out.push_back(q);
        }
    }
    return out;
}

// exact quotient of a by (t - rho); throws when rho is not a root
static UPoly u_divide_root(const UPoly& a, const Rat& rho) {
    int m = u_deg(a);
    UPoly b(m);
    Rat carry = a[m];
    for (int k = m - 1; k >= 0; --k) {
        b[k] = carry;
        carry = a[k] + rho * carry;
    }
    if (carry != 0) throw degeneracy_error("internal: node root division failed");
    return b;
}

double Node::approx() const {
    if (rational) return rat_dbl(value);
    Node copy = *this;
    copy.refine(rat_make(Int(1), Int(1) << 48));
    return rat_dbl((copy.lo + copy.hi) / 2);
}

void Node::refine(const Rat& w) {
    if (rational) return;
    int slo = sgn(u_eval(minpoly, lo));
    while (hi - lo > w) {
        Rat mid = (lo + hi) / 2;
        int sm = sgn(u_eval(minpoly, mid));
        if (sm == 0) {  // the midpoint is the root itself: collapse to exact
            rational = true;
            value = mid;
            lo = hi = mid;
            return;
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
}

bool SplineModel::all_rational() const {
    for (const auto& nd : nodes)
        if (!nd.rational) return false;
    return true;
}

HankelMatrix build_hankel(const std::vector<Rat>& m1d, int d, int n) {
    if (d < 1 || n < d + 1)
        throw validation_error("model type needs d >= 1 and n >= d+1");
    if (m1d.empty()) throw validation_error("empty axial moment list");
    const int r = static_cast<int>(m1d.size()) - 1;
    if (r < 2 * n - d)
        throw validation_error(
            "insufficient data: type-(d,n) recovery needs moments through order 2n-d");
    HankelMatrix h;
    h.d = d;
    h.n = n;
    h.r = r;
    h.c.assign(r + d + 1, Rat(0));
    for (int i = 0; i <= r; ++i) h.c[i + d] = Rat(int_binom(d + i, d)) * m1d[i];
    const int cols = r + d - n + 1;
    h.entries.assign(n + 1, std::vector<Rat>(cols));
    for (int j = 0; j <= n; ++j)
        for (int l = 0; l < cols; ++l) h.entries[j][l] = h.c[j + l];
    return h;
}

static std::vector<Node> extract_nodes(UPoly q) {
    std::vector<Node> out;
    u_trim(q);
    // nodes at 0 come from vanishing low-order coefficients
    size_t shift = 0;
    while (shift < q.size() && q[shift] == 0) ++shift;
    for (size_t i = 0; i < shift; ++i) {
        Node nd;
        nd.rational = true;
        nd.value = 0;
        out.push_back(nd);
    }
    q.erase(q.begin(), q.begin() + static_cast<long>(shift));
    u_make_primitive(q);

    // exact rational roots (with multiplicity)
    bool found = true;
    while (u_deg(q) >= 1 && found) {
        found = false;
        auto nums = divisors_of(q.front().get_num());
        auto dens = divisors_of(q.back().get_num());
        for (const auto& pn : nums) {
            for (const auto& pd : dens) {
                for (int s = 0; s < 2 && !found; ++s) {
                    Rat cand = rat_make(s ? -pn : pn, pd);
                    if (u_eval(q, cand) == 0) {
                        Node nd;
                        nd.rational = true;
                        nd.value = cand;
                        out.push_back(nd);
                        q = u_divide_root(q, cand);
                        u_make_primitive(q);
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
    }

    if (u_deg(q) >= 1) {
        UPoly g;
        {
            UPoly a = q, b = u_derivative(q);
            u_trim(b);
            while (!b.empty()) {
                UPoly r = u_rem(a, b);
                u_trim(r);
                u_make_primitive(r);
                a = b;
                b = r;
            }
            g = a;
        }
        if (u_deg(g) >= 1)
            throw degeneracy_error("repeated irrational nodes are not supported");
        auto chain = sturm_chain(q);
        Rat bound = cauchy_bound(q);
        if (roots_in(chain, -bound, bound) != u_deg(q))
            throw degeneracy_error("node polynomial has non-real roots");
        std::vector<std::pair<Rat, Rat>> work{{-bound, bound}};
        while (!work.empty()) {
            auto [a, b] = work.back();
            work.pop_back();
            long cnt = roots_in(chain, a, b);
            if (cnt == 0) continue;
            if (cnt == 1) {
                Node nd;
                nd.rational = false;
                nd.minpoly = q;
                nd.lo = a;
                nd.hi = b;
                out.push_back(nd);
                continue;
            }
            Rat mid = (a + b) / 2;
            work.push_back({a, mid});
            work.push_back({mid, b});
        }
    }
    return out;
}

static void sort_nodes(std::vector<Node>& nodes) {
    // refine isolating intervals until they exclude every exact node value
    for (auto& nd : nodes) {
        if (nd.rational) continue;
        for (const auto& other : nodes) {
            if (!other.rational) continue;
            while (!nd.rational && nd.lo < other.value && other.value < nd.hi) {
                Rat w = (nd.hi - nd.lo) / 4;
                nd.refine(w);
            }
        }
    }
    std::stable_sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
        Rat ka = a.rational ? a.value : a.lo;
        Rat kb = b.rational ? b.value : b.lo;
        if (ka != kb) return ka < kb;
        return a.rational && !b.rational;
    });
}

SplineModel recover_spline(const std::vector<Rat>& m1d, int d, int n) {
    HankelMatrix h = build_hankel(m1d, d, n);
    if (m1d[0] != 1)
        throw validation_error("recovery expects normalized moments (m_0 = 1)");
    auto ker = exact_left_kernel(h.entries);
    if (ker.empty())
        throw degeneracy_error("Hankel matrix has no left kernel: data is not of type (d,n)");
    if (ker.size() > 1)
        throw degeneracy_error("Hankel left kernel is ambiguous (dimension > 1)");
    const std::vector<Rat>& v = ker[0];  // ascending node polynomial coefficients
    if (v[n] == 0)
        throw degeneracy_error("node polynomial drops degree (b_0 = 0): model is degenerate");

    // numerator: with b_i = v_{n-i}, A_l = (1/b_0) sum_{i<=l} b_i c_{l+d-i}
    Rat b0 = v[n];
    std::vector<Rat> numer;
    for (int l = 0; l <= n - d - 1; ++l) {
        Rat s(0);
        for (int i = 0; i <= l; ++i) s += v[n - i] * h.c[l + d - i];
        numer.push_back(s / b0);
    }
    while (numer.size() > 1 && numer.back() == 0) numer.pop_back();

    std::vector<Node> nodes = extract_nodes(UPoly(v.begin(), v.end()));
    sort_nodes(nodes);
    SplineModel model;
    model.d = d;
    model.nodes = std::move(nodes);
    model.numerator = std::move(numer);

    if (model.all_rational()) {
        std::vector<Rat> back = model_moments(model, h.r);
        for (int i = 0; i <= h.r; ++i)
            if (back[i] != m1d[i])
                throw degeneracy_error("recovered model fails to reproduce the input moments");
    }
    return model;
}

MinorReport hankel_minor_check(const std::vector<Rat>& m1d, int d, int n) {
    HankelMatrix h = build_hankel(m1d, d, n);
    const int rows = n + 1;
    const int cols = static_cast<int>(h.entries[0].size());
    MinorReport rep;
    rep.rows = rows;
    rep.cols = cols;
    std::vector<int> comb(rows);
    for (int i = 0; i < rows; ++i) comb[i] = i;
    while (true) {
        Mat<Rat> sub(rows, std::vector<Rat>(rows));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < rows; ++j) sub[i][j] = h.entries[i][comb[j]];
        ++rep.total;
        if (det_bareiss(sub) == 0)
            ++rep.vanishing;
        else
            rep.nonzero_column_sets.push_back(comb);
        int i = rows - 1;
        while (i >= 0 && comb[i] == cols - rows + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < rows; ++j) comb[j] = comb[j - 1] + 1;
    }
    return rep;
}

int hankel_numeric_rank(const HankelMatrix& h, double tol) {
    std::vector<std::vector<double>> rows;
    for (const auto& row : h.entries) {
        std::vector<double> rr;
        for (const auto& x : row) rr.push_back(rat_dbl(x));
        rows.push_back(std::move(rr));
    }
    const int m = static_cast<int>(rows.size());
    const int w = static_cast<int>(rows[0].size());
    auto dot = [&](int i, int j) {
        double s = 0;
        for (int l = 0; l < w; ++l) s += rows[i][l] * rows[j][l];
        return s;
    };
    for (int sweep = 0; sweep < 64; ++sweep) {
        bool rotated = false;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                double a = dot(i, i), b = dot(j, j), g = dot(i, j);
                if (std::fabs(g) <= 1e-30 + 1e-16 * std::sqrt(a * b)) continue;
                double theta = 0.5 * std::atan2(2 * g, a - b);
                double c = std::cos(theta), s = std::sin(theta);
                for (int l = 0; l < w; ++l) {
                    double ri = rows[i][l], rj = rows[j][l];
                    rows[i][l] = c * ri + s * rj;
                    rows[j][l] = -s * ri + c * rj;
                }
                rotated = true;
            }
        }
        if (!rotated) break;
    }
    std::vector<double> sigma;
    for (int i = 0; i < m; ++i) sigma.push_back(std::sqrt(dot(i, i)));
    double smax = *std::max_element(sigma.begin(), sigma.end());
    if (smax == 0) return 0;
    int rank = 0;
    for (double s : sigma)
        if (s > tol * smax) ++rank;
    return rank;
}

std::vector<Rat> model_moments(const SplineModel& model, int r) {
    if (model.d < 1 || r < 0) throw validation_error("model_moments: bad arguments");
    if (!model.all_rational())
        throw validation_error("model_moments requires all nodes rational");
    if (model.numerator.empty()) throw validation_error("model numerator is empty");
    auto tab = table_for(1, r);
    TruncSeries<Rat> den(tab);
    den.c[0] = 1;
    for (const auto& nd : model.nodes) {
        TruncSeries<Rat> f(tab);
        f.c[0] = 1;
        if (r >= 1) f.c[1] = -nd.value;
        den = series_mul(den, f);
    }
    TruncSeries<Rat> num(tab);
    for (size_t i = 0; i < model.numerator.size(); ++i)
        if (static_cast<int>(i) <= r) num.c[i] = model.numerator[i];
    TruncSeries<Rat> mg = series_mul(series_inv(den), num);
    std::vector<Rat> out;
    for (int i = 0; i <= r; ++i)
        out.push_back(mg.c[i] / Rat(int_binom(model.d + i, model.d)));
    return out;
}

SplineModel spline_model_from_json_text(const std::string& text) {
    json j = parse_json_text(text, "spline model");
    if (!j.is_object() || !j.contains("d") || !j.contains("nodes") || !j.contains("numerator"))
        throw validation_error("spline model JSON needs fields d, nodes, numerator");
    if (!j["d"].is_number_integer() || !j["nodes"].is_array() || !j["numerator"].is_array())
        throw validation_error("spline model JSON has wrong field types");
    SplineModel m;
    m.d = j["d"].get<int>();
    if (m.d < 1) throw validation_error("spline model degree must be >= 1");
    for (const auto& entry : j["nodes"]) {
        Node nd;
        if (entry.is_array()) {
            nd.rational = true;
            nd.value = rat_from_json(entry);
        } else if (entry.is_object() && entry.contains("poly") && entry.contains("interval")) {
            nd.rational = false;
            for (const auto& c : entry["poly"]) nd.minpoly.push_back(rat_from_json(c));
            u_make_primitive(nd.minpoly);
            if (u_deg(nd.minpoly) < 2)
                throw validation_error("irrational node polynomial must have degree >= 2");
            if (!entry["interval"].is_array() || entry["interval"].size() != 2)
                throw validation_error("node interval must be a [lo, hi] pair");
            nd.lo = rat_from_json(entry["interval"][0]);
            nd.hi = rat_from_json(entry["interval"][1]);
            if (!(nd.lo < nd.hi)) throw validation_error("node interval is empty");
            if (u_eval(nd.minpoly, nd.lo) == 0 || u_eval(nd.minpoly, nd.hi) == 0)
                throw validation_error("node interval endpoints must not be roots");
            if (roots_in(sturm_chain(nd.minpoly), nd.lo, nd.hi) != 1)
                throw validation_error("node interval does not isolate exactly one root");
        } else {
            throw validation_error("node must be [num,den] or {poly, interval}");
        }
        m.nodes.push_back(std::move(nd));
    }
    if (m.n() < m.d + 1) throw validation_error("spline model needs at least d+1 nodes");
    for (const auto& c : j["numerator"]) m.numerator.push_back(rat_from_json(c));
    if (m.numerator.empty() || m.numerator[0] != 1)
        throw validation_error("spline model numerator must have constant term 1");
    if (static_cast<int>(m.numerator.size()) > m.n() - m.d)
        throw validation_error("spline model numerator degree exceeds n-d-1");
    return m;
}

std::string spline_model_to_json_text(const SplineModel& model) {
    json j;
    j["d"] = model.d;
    json nodes = json::array();
    for (const auto& nd : model.nodes) {
        if (nd.rational) {
            nodes.push_back(rat_to_json(nd.value));
        } else {
            json o;
            json poly = json::array();
            for (const auto& c : nd.minpoly) poly.push_back(rat_to_json(c));
            o["poly"] = poly;
            o["interval"] = json::array({rat_to_json(nd.lo), rat_to_json(nd.hi)});
            nodes.push_back(o);
        }
    }
    j["nodes"] = nodes;
    json numer = json::array();
    for (const auto& c : model.numerator) numer.push_back(rat_to_json(c));
    j["numerator"] = numer;
    return j.dump(2);
}

} // namespace polymom
