// q-deformed integers, binomials, and the two flavours of q-exponential
// coefficient used by the ground-state and symmetry constructions.
//
// Two standard deformations of n appear:
//
//   symmetric:  (n)_q = (qⁿ - q⁻ⁿ)/(q - q⁻¹) = q^{n-1} + q^{n-3} + … + q^{1-n}
//   brace:      {k}_r = 1 + r + r² + … + r^{k-1}   (r itself a power of q)
//
// The symmetric form drives the Serre relations via
//   binom(n,m)_q = (n)_q! / ((m)_q! (n-m)_q!),
// always itself a Laurent polynomial; we obtain it by exact division.  The
// brace form drives the deformed exponential exp_r(x) = Σ_{n≥0} xⁿ/{n}_r!
// applied to nilpotent operators.

#pragma once

#include <qgdual/laurent.hpp>

namespace qgdual {

// (n)_q, n ≥ 0; (0)_q = 0, (3)_q = q² + 1 + q⁻².
[[nodiscard]] LaurentPoly q_int_symmetric(int n);

// (n)_q! = ∏_{k=1}^{n} (k)_q; (0)_q! = 1.
[[nodiscard]] LaurentPoly q_factorial_symmetric(int n);

// binom(n,m)_q for 0 ≤ m ≤ n (throws std::domain_error otherwise).
// binom(2,1)_q = q + q⁻¹; binom(4,2)_q = q⁴ + q² + 2 + q⁻² + q⁻⁴.
[[nodiscard]] LaurentPoly q_binomial(int n, int m);

// {k}_r with r = q^r_exp: 1 + q^r_exp + … + q^{(k-1)·r_exp}.
[[nodiscard]] LaurentPoly q_brace(int k, int r_exp);

// {n}_r! = ∏_{k=1}^{n} {k}_r; {0}_r! = 1.  The overload taking a LaurentPoly
// requires r to be a pure power of q (coefficient 1) and throws otherwise.
[[nodiscard]] LaurentPoly q_brace_factorial(int n, int r_exp);
[[nodiscard]] LaurentPoly q_brace_factorial(int n, const LaurentPoly& r);

}  // namespace qgdual
