#pragma once
#include <map>
#include <string>
#include <vector>
#include "polymom/multi_index.hpp"

namespace polymom {

// Sparse multivariate polynomial with exact rational coefficients.
// nvars == -1 denotes the zero polynomial of not-yet-determined arity; it
// adopts the arity of the first operand it meets, so that T{} works as the
// additive identity in templated series code.
struct SparsePoly {
    int nvars = -1;
    std::map<MultiIndex, Rat> terms;  // zero coefficients never stored

    SparsePoly() = default;
    explicit SparsePoly(int nv) : nvars(nv) {}

    static SparsePoly constant(int nv, const Rat& c);
    static SparsePoly variable(int nv, int i, int exp = 1);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // coefficient of the zero index (0 if absent)

    void add_term(const MultiIndex& e, const Rat& c);
    Rat coeff(const MultiIndex& e) const;

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator*(const Rat& c) const;
    bool operator==(const SparsePoly& o) const;

    // product truncated to total degree <= cap (for quotient construction)
    SparsePoly mul_truncated(const SparsePoly& o, int cap) const;

    SparsePoly derivative(int var) const;
    int total_degree() const;  // -1 for the zero polynomial

    Rat eval(const std::vector<Rat>& x) const;
    // substitute value for one variable; arity is kept, the exponent drops to 0
    SparsePoly substitute(int var, const Rat& value) const;
    // substitute a polynomial for every variable (generic composition)
    SparsePoly compose(const std::vector<SparsePoly>& args, int out_nvars) const;
    // keep only the listed variables (all others must have exponent 0)
    SparsePoly restrict_vars(const std::vector<int>& keep) const;

    // divide all coefficients by the (positive) integer content, making the
    // polynomial primitive with integer coefficients; sign is preserved.
    // Returns the removed factor; the zero polynomial returns 1.
    Rat make_primitive();

    std::string str(const std::vector<std::string>& var_names) const;
};

inline SparsePoly operator*(const Rat& c, const SparsePoly& p) { return p * c; }

} // namespace polymom
