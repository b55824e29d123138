// Laurent polynomials in one variable q over the exact rationals.
//
// A LaurentPoly is a finite sum  Σ c_e · q^e  with integer exponents e of
// either sign and nonzero rational coefficients c_e.  The coefficient map is
// kept sparse and zero-pruned, so structural equality of the underlying maps
// is mathematical equality.  This is the scalar ring for every symbolic
// matrix in the project: representation matrices, central elements, Markov
// generators, duality functions.
//
// Canonical text form (used in dumps and failure messages): terms in
// ascending exponent order joined by " + ", each term "<coeff>*q^<exp>"
// except the exponent-0 term which prints as the bare coefficient; signs
// live inside the coefficient ("-1*q^-2 + 2 + 3/2*q^4"); zero prints "0".
//
// JSON form: object mapping exponent (as string) to coefficient (as string),
// in ascending exponent order, e.g. {"-2":"-1","0":"2","4":"3/2"}.

#pragma once

#include <qgdual/rational.hpp>

#include <nlohmann/json.hpp>

#include <map>
#include <string>

namespace qgdual {

using ordered_json = nlohmann::ordered_json;

class LaurentPoly {
 public:
  LaurentPoly() = default;                     // zero
  explicit LaurentPoly(const Rational& c);     // constant
  explicit LaurentPoly(long c);                // constant

  // c·q^e
  [[nodiscard]] static LaurentPoly monomial(int e, const Rational& c = 1);
  [[nodiscard]] static LaurentPoly q_pow(int e) { return monomial(e); }

  [[nodiscard]] bool is_zero() const { return coeff_.empty(); }
  [[nodiscard]] const std::map<int, Rational>& terms() const { return coeff_; }
  [[nodiscard]] Rational coeff(int e) const;
  [[nodiscard]] int min_exp() const;  // requires nonzero
  [[nodiscard]] int max_exp() const;  // requires nonzero

  // True iff the value is c·q^e for a single term; reports (e, c).
  [[nodiscard]] bool is_monomial(int* e = nullptr, Rational* c = nullptr) const;

  void add_term(int e, const Rational& c);  // accumulate, pruning zeros

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  [[nodiscard]] LaurentPoly operator+(const LaurentPoly& o) const;
  [[nodiscard]] LaurentPoly operator-(const LaurentPoly& o) const;
  [[nodiscard]] LaurentPoly operator*(const LaurentPoly& o) const;
  [[nodiscard]] LaurentPoly operator-() const;
  [[nodiscard]] bool operator==(const LaurentPoly& o) const = default;

  [[nodiscard]] LaurentPoly scaled(const Rational& c) const;
  [[nodiscard]] LaurentPoly pow(unsigned n) const;

  // Substitution q ↦ q^m (multiplies every exponent by m).  m may be
  // negative; m = 2 turns a q-expression into the same expression in q².
  [[nodiscard]] LaurentPoly subst_q_power(int m) const;

  // Exact division: returns p with p·d == *this, throwing std::domain_error
  // if no such Laurent polynomial exists (or d == 0).  Implemented by
  // shifting both operands to ordinary polynomials (multiplication by a
  // power of q is invertible) and long-dividing over ℚ with a zero-remainder
  // requirement.
  [[nodiscard]] LaurentPoly exact_div(const LaurentPoly& d) const;

  // Numeric evaluation at q > 0 (throws std::domain_error otherwise —
  // negative q would make fractional comparisons meaningless downstream and
  // q = 0 hits negative exponents).
  [[nodiscard]] double eval(double q) const;

  // Exact evaluation at a rational point q ≠ 0.
  [[nodiscard]] Rational eval_rational(const Rational& q) const;

  [[nodiscard]] std::string str() const;
  [[nodiscard]] ordered_json to_json() const;
  [[nodiscard]] static LaurentPoly from_json(const ordered_json& j);

 private:
  std::map<int, Rational> coeff_;  // exponent -> nonzero coefficient
};

[[nodiscard]] inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
  return p.scaled(c);
}

// Convenience spellings used throughout: qp(e) = q^e, lp(c) = constant.
[[nodiscard]] inline LaurentPoly qp(int e) { return LaurentPoly::q_pow(e); }
[[nodiscard]] inline LaurentPoly lp(long c) { return LaurentPoly(c); }

// q - q⁻¹ and friends appear constantly in the defining relations.
[[nodiscard]] inline LaurentPoly q_minus_qinv() { return qp(1) - qp(-1); }

}  // namespace qgdual
