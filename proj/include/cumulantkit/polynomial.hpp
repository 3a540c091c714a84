#ifndef CUMULANTKIT_POLYNOMIAL_HPP
#define CUMULANTKIT_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "cumulantkit/rational.hpp"

namespace cumulantkit {

// Commuting indeterminates used as coefficient rings: N counts independent
// copies, t and s are its real-parameter replacements.
enum class Indet { N, T, S };

std::string to_string(Indet v);

/// Dense exact polynomial in a single commuting indeterminate.
/// No trailing zero coefficients are stored; the zero polynomial has an
/// empty coefficient list. Constants are indeterminate-agnostic: binary
/// operations require matching indeterminates only when both operands are
/// non-constant, and equality compares coefficients alone.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Indet v) : var_(v) {}
    UniPoly(Indet v, std::vector<Rational> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }
    UniPoly(const Rational& constant) {   // NOLINT(google-explicit-constructor)
        if (!constant.is_zero()) c_.push_back(constant);
    }

    static UniPoly monomial(Indet v, int exponent, const Rational& coeff = Rational(1));

    Indet indet() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const Rational& coeff(int exponent) const;
    void set_coeff(int exponent, const Rational& value);

    UniPoly retagged(Indet v) const { return UniPoly(v, c_); }

    Rational eval(const Rational& x) const;

    // Formal derivative; `wrt` must name this polynomial's indeterminate
    // unless the polynomial is constant.
    UniPoly derivative(Indet wrt) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a);
    UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    const std::vector<Rational>& coefficients() const { return c_; }

    std::string str() const;

private:
    void trim();
    static Indet merged_var(const UniPoly& a, const UniPoly& b);

    Indet var_ = Indet::N;
    std::vector<Rational> c_;
};

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

/// Dense exact polynomial in the commuting pair (t, s);
/// coefficient of t^i s^j sits at row i, column j.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(const Rational& constant) {    // NOLINT(google-explicit-constructor)
        if (!constant.is_zero()) c_ = {{constant}};
    }

    // Embeds a univariate polynomial along its own axis (T or S);
    // N-tagged input is treated as t.
    static BiPoly lift(const UniPoly& p);

    // p(t+s) expanded binomially.
    static BiPoly at_t_plus_s(const UniPoly& p);

    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i, int j) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    // Substitutes s := t, collapsing to a univariate polynomial in t.
    UniPoly collapse_s_to_t() const;
    // Substitutes s := 0.
    UniPoly at_s_zero() const;

    std::string str() const;

private:
    void trim();
    std::vector<std::vector<Rational>> c_;
};

inline bool is_zero(const BiPoly& p) { return p.is_zero(); }

/// Unique polynomial of degree < #points through the given (node, value)
/// pairs, exact over the rationals. Nodes must be pairwise distinct.
UniPoly lagrange_interpolate(const std::vector<std::pair<long, Rational>>& points,
                             Indet var = Indet::N);

inline UniPoly poly_derivative(const UniPoly& p, Indet wrt) { return p.derivative(wrt); }

} // namespace cumulantkit

#endif
