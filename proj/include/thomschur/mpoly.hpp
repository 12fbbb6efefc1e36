#pragma once

#include <map>
#include <string>
#include <vector>

#include "thomschur/ints.hpp"
#include "thomschur/variable.hpp"

namespace thomschur {

// Exponent vector, sorted by the global variable order, exponents > 0.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<VarId, int>> factors);
    static Monomial one() { return Monomial(); }
    static Monomial variable(VarId v, int exp = 1);

    int degree() const;
    int exponent(VarId v) const;
    bool empty() const { return factors_.empty(); }
    const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }

    Monomial operator*(const Monomial& o) const;
    // exact division; second member false if o does not divide *this
    std::pair<Monomial, bool> divide(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    std::string str() const;

private:
    std::vector<std::pair<VarId, int>> factors_;
};

// graded lexicographic order
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients.  Immutable in spirit: all operations return new values.
class MPoly {
public:
    using Terms = std::map<Monomial, Int, MonoLess>;

    MPoly() = default;
    MPoly(Int c); // NOLINT: implicit constant
    MPoly(long c) : MPoly(Int(c)) {}
    MPoly(int c) : MPoly(Int(c)) {}
    static MPoly variable(VarId v);
    static MPoly term(Int coeff, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Int& constant_value() const; // requires is_constant()
    int total_degree() const;          // 0 for the zero polynomial
    const Terms& terms() const { return terms_; }

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator*(const Int& c) const;
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

    MPoly pow(int n) const;

    // exact coefficient of the full monomial m (0 if absent)
    Int coeff(const Monomial& m) const;
    // coefficient polynomial w.r.t. the variables of m only: sum of t/m over
    // terms t whose exponents on every variable of m match m exactly
    MPoly coeff_partial(const Monomial& m) const;

    // exact division; throws DivisionFailed when d does not divide *this
    MPoly divide_exact(const MPoly& d) const;

    Int eval(const std::map<VarId, Int>& point) const;

    std::string str() const;

private:
    void insert(const Monomial& m, Int c);
    Terms terms_;
};

inline MPoly operator*(const Int& c, const MPoly& p) { return p * c; }

} // namespace thomschur
