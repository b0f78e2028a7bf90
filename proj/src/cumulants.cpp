#include "polymom/cumulants.hpp"

#include "polymom/json_util.hpp"

namespace polymom {

const Rat& CumulantVector::at(const MultiIndex& I) const {
    auto it = values.find(I);
    if (it == values.end())
        throw validation_error("missing cumulant at index (" + mi_str(I) + ")");
    return it->second;
}

CumulantVector moments_to_cumulants(const MomentVector& m) {
    if (!m.is_normalized())
        throw validation_error(
            "moments_to_cumulants requires a probability-normalized moment vector (mass 1)");
    TruncSeries<Rat> lg = series_log(moments_to_mgf(m, m.d));
    CumulantVector k;
    k.d = m.d;
    k.r = m.r;
    for (int i = 1; i < lg.tab->size(); ++i) {
        const MultiIndex& I = lg.tab->idx[i];
        k.values[I] = lg.c[i] * rat_make(mi_factorial(I), int_factorial(mi_total(I) - 1));
    }
    return k;
}

MomentVector cumulants_to_moments(const CumulantVector& k) {
    TruncSeries<Rat> ks(k.d, k.r);
    for (int i = 1; i < ks.tab->size(); ++i) {
        const MultiIndex& I = ks.tab->idx[i];
        ks.c[i] = k.at(I) * rat_make(int_factorial(mi_total(I) - 1), mi_factorial(I));
    }
    return mgf_to_moments(series_exp(ks), k.d);
}

CumulantVector powersum_cumulants(const Mat<Rat>& vertices, int r) {
    if (vertices.empty() || r < 0) throw validation_error("powersum_cumulants: bad arguments");
    const int d = static_cast<int>(vertices[0].size());
    if (d < 1 || static_cast<int>(vertices.size()) != d + 1)
        throw validation_error("powersum_cumulants: need a (d+1) x d vertex matrix");
    for (const auto& row : vertices)
        if (static_cast<int>(row.size()) != d)
            throw validation_error("powersum_cumulants: ragged vertex matrix");
    auto tab = table_for(d, r);
    CumulantVector k;
    k.d = d;
    k.r = r;
    for (const auto& I : tab->idx) {
        if (mi_total(I) == 0) continue;
        Rat s(0);
        for (const auto& x : vertices) {
            Rat term(1);
            for (int j = 0; j < d; ++j)
                if (I[j] != 0) term *= rat_pow(x[j], I[j]);
            s += term;
        }
        k.values[I] = s;
    }
    return k;
}

template <class T>
static void series_scale(TruncSeries<T>& s, const Rat& w) {
    for (auto& x : s.c) x = x * w;
}

// Power sums of the d+1 linear forms <x_j, t> satisfy Newton's identities
// against their elementary symmetric functions e_1..e_{d+1}; every layer
// above d+1 reduces to lower ones.  The layers are series in t whose
// coefficients carry the cumulants: p_s(t) = sum_{|J|=s} (s!/J!) k_J t^J.
template <class T, class GetK>
static T newton_reduce_generic(int d, const MultiIndex& I, GetK getk) {
    if (static_cast<int>(I.size()) != d)
        throw validation_error("newton_reduce: index arity mismatch");
    for (int v : I)
        if (v < 0) throw validation_error("newton_reduce: negative exponent");
    const int ell = mi_total(I);
    if (ell < d + 2) throw validation_error("newton_reduce requires |I| >= d+2");
    auto tab = table_for(d, ell);
    std::vector<TruncSeries<T>> p(ell + 1, TruncSeries<T>(tab));
    for (const auto& J : tab->idx) {
        int s = mi_total(J);
        if (s >= 1 && s <= d + 1)
            p[s].at(J) = getk(J) * rat_make(int_factorial(s), mi_factorial(J));
    }
    std::vector<TruncSeries<T>> e(d + 2, TruncSeries<T>(tab));
    scalar_assign_one(e[0].c[0]);
    for (int i = 1; i <= d + 1; ++i) {
        TruncSeries<T> acc(tab);
        for (int s = 1; s <= i; ++s) {
            TruncSeries<T> term = series_mul(e[i - s], p[s]);
            series_scale(term, rat_make((s % 2) ? 1 : -1, i));
            acc = series_add(acc, term);
        }
        e[i] = acc;
    }
    for (int l = d + 2; l <= ell; ++l) {
        TruncSeries<T> acc(tab);
        for (int s = 1; s <= d + 1; ++s) {
            TruncSeries<T> term = series_mul(e[s], p[l - s]);
            if (s % 2 == 0) series_scale(term, Rat(-1));
            acc = series_add(acc, term);
        }
        p[l] = acc;
    }
    return p[ell].at(I) * rat_make(mi_factorial(I), int_factorial(ell));
}

Rat newton_reduce(const CumulantVector& k_low, const MultiIndex& I) {
    return newton_reduce_generic<Rat>(k_low.d, I,
                                      [&](const MultiIndex& J) { return k_low.at(J); });
}

std::vector<MultiIndex> newton_reduce_vars(int d) {
    std::vector<MultiIndex> vars;
    auto tab = table_for(d, d + 1);
    for (const auto& J : tab->idx)
        if (mi_total(J) >= 1) vars.push_back(J);
    return vars;
}

SparsePoly newton_reduce_symbolic(int d, const MultiIndex& I) {
    std::vector<MultiIndex> vars = newton_reduce_vars(d);
    const int nv = static_cast<int>(vars.size());
    std::map<MultiIndex, int> pos;
    for (int i = 0; i < nv; ++i) pos[vars[i]] = i;
    return newton_reduce_generic<SparsePoly>(
        d, I, [&](const MultiIndex& J) { return SparsePoly::variable(nv, pos.at(J)); });
}

std::array<std::pair<std::string, Rat>, 10> plucker_from_cumulants(const CumulantVector& k) {
    if (k.d != 2 || k.r < 3)
        throw validation_error("plucker coordinates need planar cumulants through order 3");
    Rat k10 = k.at({1, 0}), k01 = k.at({0, 1});
    Rat k20 = k.at({2, 0}), k11 = k.at({1, 1}), k02 = k.at({0, 2});
    Rat k30 = k.at({3, 0}), k21 = k.at({2, 1}), k12 = k.at({1, 2}), k03 = k.at({0, 3});
    std::array<std::pair<std::string, Rat>, 10> p;
    p[0] = {"p01", 3 * k20 - k10 * k10};
    p[1] = {"p02", 6 * k11 - 2 * k10 * k01};
    p[2] = {"p03", 9 * k21 + 12 * k11 * k10 - 5 * k10 * k10 * k01};
    p[3] = {"p04", 18 * k30 - 24 * k20 * k10 + 6 * k10 * k10 * k10};
    p[4] = {"p12", 3 * k02 - k01 * k01};
    p[5] = {"p13", 9 * k12 - 6 * k11 * k01 + 6 * k02 * k10 - k10 * k01 * k01};
    p[6] = {"p14", 18 * k21 - 12 * k11 * k10 + 12 * k20 * k01 - 2 * k10 * k10 * k01};
    p[7] = {"p23", 9 * k03 - 12 * k02 * k01 + 3 * k01 * k01 * k01};
    p[8] = {"p24", 18 * k12 + 24 * k11 * k01 - 10 * k10 * k01 * k01};
    p[9] = {"p34", 72 * k21 * k01 + 72 * k12 * k10 + 9 * k20 * k02 - 9 * k20 * k01 * k01 -
                       9 * k11 * k11 + 18 * k11 * k10 * k01 - 9 * k02 * k10 * k10 -
                       16 * k10 * k10 * k01 * k01};
    return p;
}

CumulantVector cumulant_vector_from_json_text(const std::string& text) {
    json j = parse_json_text(text, "cumulant vector");
    if (!j.is_object() || !j.contains("d") || !j.contains("r") || !j.contains("values"))
        throw validation_error("cumulant vector JSON needs fields d, r, values");
    if (!j["d"].is_number_integer() || !j["r"].is_number_integer() || !j["values"].is_object())
        throw validation_error("cumulant vector JSON has wrong field types");
    CumulantVector k;
    k.d = j["d"].get<int>();
    k.r = j["r"].get<int>();
    if (k.d < 1 || k.d > 16 || k.r < 1 || k.r > 64)
        throw validation_error("cumulant vector dimensions out of supported range");
    for (const auto& [key, val] : j["values"].items()) {
        MultiIndex I = parse_index_key(key, k.d, k.r);
        if (mi_total(I) == 0)
            throw validation_error("cumulant index 0 is not stored (k_0 = 0 by convention)");
        k.values[I] = rat_from_json(val);
    }
    auto tab = table_for(k.d, k.r);
    for (const auto& I : tab->idx)
        if (mi_total(I) >= 1 && !k.values.count(I))
            throw validation_error("missing cumulant at index (" + mi_str(I) + ")");
    return k;
}

std::string cumulant_vector_to_json_text(const CumulantVector& k) {
    json j;
    j["d"] = k.d;
    j["r"] = k.r;
    json vals = json::object();
    auto tab = table_for(k.d, k.r);
    for (const auto& I : tab->idx)
        if (mi_total(I) >= 1) vals[mi_str(I)] = rat_to_json(k.at(I));
    j["values"] = vals;
    return j.dump(2);
}

} // namespace polymom
