#ifndef ENRIQUES_GPOLY_HPP
#define ENRIQUES_GPOLY_HPP

#include <utility>
#include <variant>
#include <vector>

#include "enriques/numeric.hpp"

namespace enriques {

// Dense univariate polynomial over Q(i); coefficient of x^k at index k.
// Normalized form has no trailing zero coefficients; the zero polynomial is {}.
using GPoly = std::vector<GQ>;

GPoly gp_normalize(GPoly p);
int gp_degree(const GPoly& p);  // -1 for the zero polynomial
bool gp_is_zero(const GPoly& p);
GQ gp_lead(const GPoly& p);

GPoly gp_add(const GPoly& a, const GPoly& b);
GPoly gp_sub(const GPoly& a, const GPoly& b);
GPoly gp_neg(const GPoly& a);
GPoly gp_mul(const GPoly& a, const GPoly& b);
GPoly gp_scale(const GQ& c, const GPoly& a);
GPoly gp_derivative(const GPoly& a);
GQ gp_eval(const GPoly& a, const GQ& x);
GPoly gp_monic(const GPoly& a);
GPoly gp_pow(const GPoly& a, unsigned n);

// quotient/remainder over the field Q(i)
std::pair<GPoly, GPoly> gp_divrem(const GPoly& a, const GPoly& b);
GPoly gp_exact_div(const GPoly& a, const GPoly& b);  // asserts zero remainder

GPoly gp_gcd(const GPoly& a, const GPoly& b);  // monic gcd
GPoly gp_squarefree_part(const GPoly& a);

// Taylor shift: p(x + c)
GPoly gp_shift(const GPoly& p, const GQ& c);

Rat gp_height(const GPoly& p);  // max coefficient norm, for diagnostics

// Bivariate polynomial as a dense vector in y with GPoly (in x) coefficients.
using GPoly2 = std::vector<GPoly>;

GPoly2 gp2_normalize(GPoly2 p);
int gp2_degree_y(const GPoly2& p);
int gp2_degree_x(const GPoly2& p);
bool gp2_is_zero(const GPoly2& p);
GPoly2 gp2_add(const GPoly2& a, const GPoly2& b);
GPoly2 gp2_sub(const GPoly2& a, const GPoly2& b);
GPoly2 gp2_mul(const GPoly2& a, const GPoly2& b);
GPoly2 gp2_scale(const GQ& c, const GPoly2& a);
GPoly2 gp2_dx(const GPoly2& a);
GPoly2 gp2_dy(const GPoly2& a);
GQ gp2_eval(const GPoly2& a, const GQ& x, const GQ& y);
GPoly gp2_eval_x(const GPoly2& a, const GQ& x);  // univariate in y
GPoly gp2_eval_y(const GPoly2& a, const GQ& y);  // univariate in x
GPoly2 gp2_shift(const GPoly2& a, const GQ& x0, const GQ& y0);  // p(x0+u, y0+v)
GPoly2 gp2_swap_vars(const GPoly2& a);

// resultant with respect to y, a polynomial in x
GPoly gp2_resultant_y(const GPoly2& f, const GPoly2& g);

// content (gcd of y-coefficients, a polynomial in x) and bivariate gcd
GPoly gp2_content(const GPoly2& f);
GPoly2 gp2_gcd(const GPoly2& f, const GPoly2& g);

// ---- arithmetic modulo a univariate modulus (dynamic evaluation) ----

GPoly gp_mod(const GPoly& a, const GPoly& m);
GPoly gp_mulmod(const GPoly& a, const GPoly& b, const GPoly& m);

struct ModInverse { GPoly inverse; };
struct ModZeroDivisor { GPoly factor; };  // proper factor of the modulus
struct ModZero {};
using ModInvResult = std::variant<ModInverse, ModZeroDivisor, ModZero>;
ModInvResult gp_try_invert_mod(const GPoly& a, const GPoly& m);

// Triangular description of the zero set of a system of bivariate polynomials
// over the vanishing locus of a squarefree modulus m(x): on each branch the
// system's gcd in y is g, monic and squarefree over that branch.
struct TriangularBranch {
    GPoly modulus;  // squarefree m_k(x)
    GPoly2 gcd_y;   // monic in y; constant 1 means no solutions over the branch
};

std::vector<TriangularBranch> triangular_gcd_over(const std::vector<GPoly2>& system,
                                                  const GPoly& modulus);

}  // namespace enriques

#endif
