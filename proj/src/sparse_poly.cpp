#include "polymom/sparse_poly.hpp"

#include <algorithm>

namespace polymom {

// A poly with nvars == -1 is a bare constant (single empty-key term at most);
// lift() re-keys it into a concrete arity when it meets a sized operand.
static SparsePoly lift(const SparsePoly& p, int nv) {
    if (p.nvars == nv) return p;
    if (p.nvars != -1) throw validation_error("polynomial arity mismatch");
    SparsePoly out(nv);
    if (!p.terms.empty()) out.terms[MultiIndex(nv, 0)] = p.terms.begin()->second;
    return out;
}

static int common_arity(const SparsePoly& a, const SparsePoly& b) {
    if (a.nvars == b.nvars) return a.nvars;
    if (a.nvars == -1) return b.nvars;
    if (b.nvars == -1) return a.nvars;
    throw validation_error("polynomial arity mismatch");
}

SparsePoly SparsePoly::constant(int nv, const Rat& c) {
    SparsePoly p(nv);
    if (c != 0) p.terms[MultiIndex(std::max(nv, 0), 0)] = c;
    return p;
}

SparsePoly SparsePoly::variable(int nv, int i, int exp) {
    if (i < 0 || i >= nv) throw validation_error("variable index out of range");
    SparsePoly p(nv);
    MultiIndex e(nv, 0);
    e[i] = exp;
    p.terms[e] = Rat(1);
    return p;
}

bool SparsePoly::is_constant() const {
    if (terms.empty()) return true;
    if (terms.size() > 1) return false;
    return mi_total(terms.begin()->first) == 0;
}

Rat SparsePoly::constant_value() const {
    for (const auto& [e, c] : terms)
        if (mi_total(e) == 0) return c;
    return Rat(0);
}

void SparsePoly::add_term(const MultiIndex& e, const Rat& c) {
    if (c == 0) return;
    if (nvars >= 0 && static_cast<int>(e.size()) != nvars)
        throw validation_error("exponent length does not match polynomial arity");
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rat SparsePoly::coeff(const MultiIndex& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? Rat(0) : it->second;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    int nv = common_arity(*this, o);
    if (nvars != nv) *this = lift(*this, nv);
    const SparsePoly rhs = (o.nvars == nv) ? o : lift(o, nv);
    for (const auto& [e, c] : rhs.terms) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    int nv = common_arity(*this, o);
    if (nvars != nv) *this = lift(*this, nv);
    const SparsePoly rhs = (o.nvars == nv) ? o : lift(o, nv);
    for (const auto& [e, c] : rhs.terms) add_term(e, -c);
    return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly out = *this;
    out += o;
    return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly out = *this;
    out -= o;
    return out;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out(nvars);
    for (const auto& [e, c] : terms) out.terms[e] = -c;
    return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    return mul_truncated(o, -1);
}

SparsePoly SparsePoly::mul_truncated(const SparsePoly& o, int cap) const {
    int nv = common_arity(*this, o);
    const SparsePoly a = (nvars == nv) ? *this : lift(*this, nv);
    const SparsePoly b = (o.nvars == nv) ? o : lift(o, nv);
    SparsePoly out(nv);
    const int width = std::max(nv, 0);
    MultiIndex e(width);
    for (const auto& [ea, ca] : a.terms) {
        int ta = mi_total(ea);
        for (const auto& [eb, cb] : b.terms) {
            if (cap >= 0 && ta + mi_total(eb) > cap) continue;
            for (int l = 0; l < width; ++l) e[l] = ea[l] + eb[l];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

SparsePoly SparsePoly::operator*(const Rat& c) const {
    SparsePoly out(nvars);
    if (c == 0) return out;
    for (const auto& [e, co] : terms) out.terms[e] = co * c;
    return out;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    if (nvars == o.nvars) return terms == o.terms;
    int nv = common_arity(*this, o);
    return lift(*this, nv).terms == lift(o, nv).terms;
}

SparsePoly SparsePoly::derivative(int var) const {
    if (var < 0 || var >= nvars) throw validation_error("derivative variable out of range");
    SparsePoly out(nvars);
    for (const auto& [e, c] : terms) {
        if (e[var] == 0) continue;
        MultiIndex e2 = e;
        e2[var] -= 1;
        out.terms[e2] = c * e[var];
    }
    return out;
}

int SparsePoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms) deg = std::max(deg, mi_total(e));
    return deg;
}

Rat SparsePoly::eval(const std::vector<Rat>& x) const {
    if (nvars > 0 && static_cast<int>(x.size()) != nvars)
        throw validation_error("evaluation point has wrong dimension");
    Rat s(0);
    for (const auto& [e, c] : terms) {
        Rat v = c;
        for (size_t l = 0; l < e.size(); ++l)
            if (e[l]) v *= rat_pow(x[l], e[l]);
        s += v;
    }
    return s;
}

SparsePoly SparsePoly::substitute(int var, const Rat& value) const {
    if (var < 0 || var >= nvars) throw validation_error("substitution variable out of range");
    SparsePoly out(nvars);
    for (const auto& [e, c] : terms) {
        Rat v = c;
        if (e[var]) v *= rat_pow(value, e[var]);
        MultiIndex e2 = e;
        e2[var] = 0;
        out.add_term(e2, v);
    }
    return out;
}

SparsePoly SparsePoly::compose(const std::vector<SparsePoly>& args, int out_nvars) const {
    if (nvars > 0 && static_cast<int>(args.size()) != nvars)
        throw validation_error("composition needs one argument per variable");
    SparsePoly out(out_nvars);
    for (const auto& [e, c] : terms) {
        SparsePoly term = SparsePoly::constant(out_nvars, c);
        for (size_t l = 0; l < e.size(); ++l)
            for (int k = 0; k < e[l]; ++k) term = term * args[l];
        out += term;
    }
    return out;
}

SparsePoly SparsePoly::restrict_vars(const std::vector<int>& keep) const {
    SparsePoly out(static_cast<int>(keep.size()));
    for (const auto& [e, c] : terms) {
        MultiIndex e2(keep.size());
        int seen = 0;
        for (size_t l = 0; l < keep.size(); ++l) {
            e2[l] = e[keep[l]];
            seen += e[keep[l]];
        }
        if (seen != mi_total(e))
            throw validation_error("restrict_vars drops a variable with nonzero exponent");
        out.add_term(e2, c);
    }
    return out;
}

Rat SparsePoly::make_primitive() {
    if (terms.empty()) return Rat(1);
    Int den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : terms) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rat factor = rat_make(num_gcd, den_lcm);
    Rat inv = Rat(1) / factor;
    for (auto& [e, c] : terms) c *= inv;
    return factor;
}

std::string SparsePoly::str(const std::vector<std::string>& var_names) const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms) {
        std::string mono;
        for (size_t l = 0; l < e.size(); ++l) {
            if (!e[l]) continue;
            if (!mono.empty()) mono += "*";
            mono += var_names[l];
            if (e[l] > 1) mono += "^" + std::to_string(e[l]);
        }
        std::string cs = rat_str(c);
        if (!first) s += (c > 0 ? " + " : " - ");
        else if (c < 0) s += "-";
        std::string mag = (c > 0 ? cs : rat_str(-c));
        if (mono.empty()) s += mag;
        else if (mag == "1") s += mono;
        else s += mag + "*" + mono;
        first = false;
    }
    return s;
}

} // namespace polymom
