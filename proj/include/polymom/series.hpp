#pragma once
#include <concepts>
#include "polymom/sparse_poly.hpp"

namespace polymom {

// Dense truncated multivariate power series over T (Rat for numeric work,
// SparsePoly for symbolic coefficients). Coefficients are aligned with the
// graded-lex IndexTable of (d, r); arithmetic never exceeds order r.
template <class T>
struct TruncSeries {
    std::shared_ptr<const IndexTable> tab;
    std::vector<T> c;

    TruncSeries() = default;
    TruncSeries(int d, int r) : tab(table_for(d, r)), c(tab->size()) {}
    explicit TruncSeries(std::shared_ptr<const IndexTable> t)
        : tab(std::move(t)), c(tab->size()) {}

    int d() const { return tab->d; }
    int r() const { return tab->r; }

    T& operator[](int i) { return c[i]; }
    const T& operator[](int i) const { return c[i]; }

    T& at(const MultiIndex& I) { return c[checked_pos(I)]; }
    const T& at(const MultiIndex& I) const { return c[checked_pos(I)]; }

    int checked_pos(const MultiIndex& I) const {
        int p = tab->find(I);
        if (p < 0) throw validation_error("series index out of truncation range");
        return p;
    }

    bool same_shape(const TruncSeries& o) const {
        return tab->d == o.tab->d && tab->r == o.tab->r;
    }
};

namespace detail {
inline bool scalar_is_zero(const Rat& x) { return x == 0; }
inline bool scalar_is_zero(const SparsePoly& x) { return x.is_zero(); }
inline bool scalar_is_one(const Rat& x) { return x == 1; }
inline bool scalar_is_one(const SparsePoly& x) {
    return x.is_constant() && x.constant_value() == 1;
}
} // namespace detail

inline void scalar_assign_one(Rat& x) { x = 1; }
inline void scalar_assign_one(SparsePoly& x) {
    x.terms.clear();
    x.add_term(MultiIndex(std::max(x.nvars, 0)), Rat(1));
}

template <class T>
TruncSeries<T> series_add(const TruncSeries<T>& a, const TruncSeries<T>& b) {
    if (!a.same_shape(b)) throw validation_error("series shape mismatch");
    TruncSeries<T> out(a.tab);
    for (int i = 0; i < a.tab->size(); ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
}

template <class T>
TruncSeries<T> series_mul(const TruncSeries<T>& a, const TruncSeries<T>& b) {
    if (!a.same_shape(b)) throw validation_error("series shape mismatch");
    const IndexTable& tab = *a.tab;
    TruncSeries<T> out(a.tab);
    const int n = tab.size();
    MultiIndex sum(tab.d);
    for (int i = 0; i < n; ++i) {
        if (detail::scalar_is_zero(a.c[i])) continue;
        const MultiIndex& I = tab.idx[i];
        int ti = mi_total(I);
        for (int j = 0; j < n; ++j) {
            if (ti + mi_total(tab.idx[j]) > tab.r) continue;
            if (detail::scalar_is_zero(b.c[j])) continue;
            const MultiIndex& J = tab.idx[j];
            for (int l = 0; l < tab.d; ++l) sum[l] = I[l] + J[l];
            out.c[tab.pos.at(sum)] += a.c[i] * b.c[j];
        }
    }
    return out;
}

// 1/a truncated at order r; requires an invertible constant term. The series
// is written a = a0(1 - L) and inverted by the alternating geometric sum
// (1/a0)(1 + L + L^2 + ... + L^r).
template <class T>
TruncSeries<T> series_inv(const TruncSeries<T>& a) {
    const T& a0 = a.c[0];
    Rat lead;
    if constexpr (std::same_as<T, Rat>) {
        if (a0 == 0) throw validation_error("series not invertible: zero constant term");
        lead = a0;
    } else {
        if (!a0.is_constant() || a0.constant_value() == 0)
            throw validation_error("series not invertible: constant term is not a nonzero scalar");
        lead = a0.constant_value();
    }
    Rat neg_inv = Rat(-1) / lead;
    TruncSeries<T> L(a.tab);  // 1 - a/a0, zero constant term
    for (int i = 1; i < a.tab->size(); ++i) L.c[i] = a.c[i] * neg_inv;
    TruncSeries<T> out(a.tab), pw(a.tab);
    scalar_assign_one(out.c[0]);
    scalar_assign_one(pw.c[0]);
    for (int k = 1; k <= a.tab->r; ++k) {
        pw = series_mul(pw, L);
        for (int i = 0; i < a.tab->size(); ++i) out.c[i] += pw.c[i];
    }
    Rat inv_lead = Rat(1) / lead;
    for (auto& x : out.c) x = x * inv_lead;
    return out;
}

// log(a) truncated at order r; requires constant term exactly 1.
template <class T>
TruncSeries<T> series_log(const TruncSeries<T>& a) {
    if (!detail::scalar_is_one(a.c[0]))
        throw validation_error("series log requires constant term 1");
    TruncSeries<T> L(a.tab);  // a - 1
    for (int i = 1; i < a.tab->size(); ++i) L.c[i] = a.c[i];
    TruncSeries<T> out(a.tab), pw = L;
    for (int k = 1; k <= a.tab->r; ++k) {
        Rat w = rat_make((k % 2) ? 1 : -1, k);
        for (int i = 0; i < a.tab->size(); ++i) out.c[i] += pw.c[i] * w;
        if (k < a.tab->r) pw = series_mul(pw, L);
    }
    return out;
}

// exp(a) truncated at order r; requires constant term exactly 0.
template <class T>
TruncSeries<T> series_exp(const TruncSeries<T>& a) {
    if (!detail::scalar_is_zero(a.c[0]))
        throw validation_error("series exp requires constant term 0");
    TruncSeries<T> out(a.tab), pw(a.tab);
    scalar_assign_one(out.c[0]);
    scalar_assign_one(pw.c[0]);
    for (int k = 1; k <= a.tab->r; ++k) {
        pw = series_mul(pw, a);
        Rat w = rat_make(1, 1);
        w /= int_factorial(k);
        for (int i = 0; i < a.tab->size(); ++i) out.c[i] += pw.c[i] * w;
    }
    return out;
}

} // namespace polymom
