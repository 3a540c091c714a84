#ifndef CUMULANTKIT_GENFUN_HPP
#define CUMULANTKIT_GENFUN_HPP

#include <string>
#include <vector>

#include "cumulantkit/cumulants.hpp"
#include "cumulantkit/ncseries.hpp"
#include "cumulantkit/polynomial.hpp"

namespace cumulantkit {

/// M_X: constant term 1, coefficient of z_{i_1}..z_{i_n} the joint moment.
NCSeries<Rational> moment_series(const MomentFunctional& phi, int degree_bound);

/// K_X: zero constant term, coefficients the joint cumulants.
NCSeries<Rational> cumulant_series(const CumulantFunctional& k, int degree_bound);

/// M_X(t): coefficients are the copy-count polynomials of the flavor's
/// dot operation, in t; constant term 1, and t = 0 gives the series 1.
NCSeries<UniPoly> moment_series_t(Flavor flavor, const MomentFunctional& phi, int degree_bound);

/// Moment series of the sum of two monotone independent families:
/// M_{X+Y} = M_Y * M_X(z_1 M_Y, ..., z_r M_Y).
NCSeries<Rational> muraki_compose(const NCSeries<Rational>& mx, const NCSeries<Rational>& my);

struct FlowCheckReport {
    bool exact = false;
    // first differing coefficient when not exact
    int component = -1;
    Word word;
    std::string lhs;
    std::string rhs;
};

/// Checks mu_X(t+s) = mu_X(t) o mu_X(s) as an exact identity of
/// polynomial coefficients in (t, s); monotone by construction.
FlowCheckReport flow_check(const MomentFunctional& phi, int degree_bound);

/// d/dt M_X(t) - M_X(t) K_X(z_1 M_X(t), ..., z_r M_X(t)) with monotone
/// cumulants; the zero series exactly.
NCSeries<UniPoly> ode_residual(const MomentFunctional& phi, int degree_bound);

/// The unique series R with zero constant term solving
/// M_X - 1 = R(z_1 M_X, ..., z_r M_X), solved degree by degree; its
/// coefficients are the free cumulants.
NCSeries<Rational> r_transform(const MomentFunctional& phi, int degree_bound);

/// Coefficients of A(z) = -z K(1/z) for a single-variable monotone
/// cumulant sequence: entry i is the coefficient of z^{-i}, i.e. -k_{i+1}.
std::vector<Rational> a_transform(const CumulantFunctional& k);

// Series JSON: {"r":..,"D":..,"coeffs":{"":"1","1,2":"1/3",...}};
// polynomial scalars appear as {"t":["0","1","-2/3"]}.
std::string series_to_json_text(const NCSeries<Rational>& s);
std::string series_to_json_text(const NCSeries<UniPoly>& s);
NCSeries<Rational> series_from_json_text(const std::string& text);

} // namespace cumulantkit

#endif
