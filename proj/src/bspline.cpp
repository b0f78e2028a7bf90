#include "polymom/bspline.hpp"

#include <algorithm>

namespace polymom {

static Rat poly_eval_asc(const std::vector<Rat>& p, const Rat& x) {
    Rat v(0);
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

Rat PiecewisePoly::eval(const Rat& x) const {
    if (breaks.empty() || x < breaks.front() || x > breaks.back()) return Rat(0);
    size_t k = 0;
    while (k + 2 < breaks.size() && !(x < breaks[k + 1])) ++k;
    return poly_eval_asc(pieces[k], x);
}

PiecewisePoly PiecewisePoly::derivative() const {
    PiecewisePoly out;
    out.breaks = breaks;
    for (const auto& p : pieces) {
        std::vector<Rat> dp;
        for (size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * Rat(static_cast<long>(i)));
        out.pieces.push_back(std::move(dp));
    }
    return out;
}

Rat PiecewisePoly::moment(int i) const {
    if (i < 0) throw validation_error("moment order must be >= 0");
    Rat total(0);
    for (size_t k = 0; k < pieces.size(); ++k) {
        for (size_t c = 0; c < pieces[k].size(); ++c) {
            long e = i + static_cast<long>(c) + 1;
            total += pieces[k][c] * (rat_pow(breaks[k + 1], e) - rat_pow(breaks[k], e)) / Rat(e);
        }
    }
    return total;
}

// (a + b x) * p
static std::vector<Rat> poly_mul_linear(const std::vector<Rat>& p, const Rat& a, const Rat& b) {
    if (p.empty()) return {};
    std::vector<Rat> out(p.size() + 1, Rat(0));
    for (size_t i = 0; i < p.size(); ++i) {
        out[i] += a * p[i];
        out[i + 1] += b * p[i];
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

PiecewisePoly bspline_basis(const std::vector<Rat>& knots, int j, int p) {
    const int nk = static_cast<int>(knots.size());
    if (nk < 2) throw validation_error("B-spline basis needs at least two knots");
    for (int i = 0; i + 1 < nk; ++i)
        if (!(knots[i] < knots[i + 1]))
            throw validation_error("B-spline knots must be strictly ascending");
    if (p < 0 || j < 0 || j + p + 1 >= nk)
        throw validation_error("B-spline index out of range");
    PiecewisePoly out;
    out.breaks = knots;
    out.pieces.assign(nk - 1, {});
    if (p == 0) {
        out.pieces[j] = {Rat(1)};
        return out;
    }
    PiecewisePoly left = bspline_basis(knots, j, p - 1);
    PiecewisePoly right = bspline_basis(knots, j + 1, p - 1);
    Rat dl = knots[j + p] - knots[j];
    Rat dr = knots[j + p + 1] - knots[j + 1];
    for (int k = 0; k < nk - 1; ++k) {
        // (x - knots[j]) / dl * left + (knots[j+p+1] - x) / dr * right
        std::vector<Rat> a = poly_mul_linear(left.pieces[k], -knots[j] / dl, Rat(1) / dl);
        std::vector<Rat> b =
            poly_mul_linear(right.pieces[k], knots[j + p + 1] / dr, Rat(-1) / dr);
        std::vector<Rat> sum(std::max(a.size(), b.size()), Rat(0));
        for (size_t i = 0; i < a.size(); ++i) sum[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) sum[i] += b[i];
        while (!sum.empty() && sum.back() == 0) sum.pop_back();
        out.pieces[k] = std::move(sum);
    }
    return out;
}

PiecewisePoly spline_density(const SplineModel& model, int verify_order) {
    if (!model.all_rational())
        throw validation_error("density evaluation requires rational nodes");
    const int d = model.d;
    const int n = model.n();
    std::vector<Rat> knots;
    for (const auto& nd : model.nodes) knots.push_back(nd.value);
    std::sort(knots.begin(), knots.end());
    for (size_t i = 0; i + 1 < knots.size(); ++i)
        if (knots[i] == knots[i + 1])
            throw degeneracy_error("coincident nodes are not supported by the density evaluator");
    const int nb = n - d;  // basis size for degree d-1 over n knots
    if (nb < 1) throw validation_error("density needs n >= d+1");

    std::vector<PiecewisePoly> basis;
    for (int j = 0; j < nb; ++j) basis.push_back(bspline_basis(knots, j, d - 1));

    const int vo = std::max(nb - 1, verify_order);
    std::vector<Rat> target = model_moments(model, vo);
    Mat<Rat> gram(nb, std::vector<Rat>(nb));
    std::vector<Rat> rhs(nb);
    for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < nb; ++j) gram[i][j] = basis[j].moment(i);
        rhs[i] = target[i];
    }
    auto sol = solve_unique(gram, rhs);
    if (!sol) throw degeneracy_error("moment-matching system is singular");

    PiecewisePoly f;
    f.breaks = knots;
    f.pieces.assign(n - 1, {});
    for (int j = 0; j < nb; ++j) {
        for (int k = 0; k < n - 1; ++k) {
            const auto& src = basis[j].pieces[k];
            auto& dst = f.pieces[k];
            if (dst.size() < src.size()) dst.resize(src.size(), Rat(0));
            for (size_t i = 0; i < src.size(); ++i) dst[i] += (*sol)[j] * src[i];
        }
    }
    for (auto& piece : f.pieces)
        while (!piece.empty() && piece.back() == 0) piece.pop_back();

    for (int i = 0; i <= vo; ++i)
        if (f.moment(i) != target[i])
            throw degeneracy_error("density verification failed at order " + std::to_string(i));
    return f;
}

int smoothness_order(const PiecewisePoly& f, int max_check) {
    PiecewisePoly g = f;
    const size_t np = f.pieces.size();
    for (int k = 0; k <= max_check; ++k) {
        for (size_t bi = 0; bi < g.breaks.size(); ++bi) {
            Rat left = (bi == 0) ? Rat(0) : poly_eval_asc(g.pieces[bi - 1], g.breaks[bi]);
            Rat right = (bi == np) ? Rat(0) : poly_eval_asc(g.pieces[bi], g.breaks[bi]);
            if (left != right) return k - 1;
        }
        g = g.derivative();
    }
    return max_check;
}

} // namespace polymom
