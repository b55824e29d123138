#include <qgdual/qcomb.hpp>

#include <stdexcept>

namespace qgdual {

LaurentPoly q_int_symmetric(int n) {
  if (n < 0) throw std::domain_error("q_int_symmetric: n must be >= 0");
  LaurentPoly p;
  // q^{n-1} + q^{n-3} + ... + q^{1-n}; empty sum for n = 0.
  for (int e = n - 1; e >= 1 - n; e -= 2) p.add_term(e, 1);
  return p;
}

LaurentPoly q_factorial_symmetric(int n) {
  if (n < 0) throw std::domain_error("q_factorial_symmetric: n must be >= 0");
  LaurentPoly acc(1);
  for (int k = 1; k <= n; ++k) acc = acc * q_int_symmetric(k);
  return acc;
}

LaurentPoly q_binomial(int n, int m) {
  if (m < 0 || n < 0 || m > n)
    throw std::domain_error("q_binomial: need 0 <= m <= n");
  return q_factorial_symmetric(n).exact_div(
      q_factorial_symmetric(m) * q_factorial_symmetric(n - m));
}

LaurentPoly q_brace(int k, int r_exp) {
  if (k < 0) throw std::domain_error("q_brace: k must be >= 0");
  LaurentPoly p;
  for (int j = 0; j < k; ++j) p.add_term(j * r_exp, 1);
  return p;
}

LaurentPoly q_brace_factorial(int n, int r_exp) {
  if (n < 0) throw std::domain_error("q_brace_factorial: n must be >= 0");
  LaurentPoly acc(1);
  for (int k = 1; k <= n; ++k) acc = acc * q_brace(k, r_exp);
  return acc;
}

LaurentPoly q_brace_factorial(int n, const LaurentPoly& r) {
  int e = 0;
  Rational c;
  if (!r.is_monomial(&e, &c) || c != 1)
    throw std::domain_error("q_brace_factorial: r must be a pure power of q");
  return q_brace_factorial(n, e);
}

}  // namespace qgdual
