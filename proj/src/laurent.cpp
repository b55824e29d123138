#include <qgdual/laurent.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qgdual {

// ===== rationals =====

std::string rat_str(const Rational& r) { return r.str(); }

Rational rat_parse(const std::string& s) { return Rational(s); }

double rat_double(const Rational& r) { return r.convert_to<double>(); }

Rational rat_pow(const Rational& r, long n) {
  if (n == 0) return Rational(1);
  if (r == 0 && n < 0) throw std::domain_error("rat_pow: 0 to a negative power");
  Rational base = n > 0 ? r : Rational(1) / r;
  unsigned long m = n > 0 ? static_cast<unsigned long>(n) : static_cast<unsigned long>(-n);
  Rational acc(1);
  while (m != 0) {
    if (m & 1u) acc *= base;
    base *= base;
    m >>= 1u;
  }
  return acc;
}

// ===== construction =====

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) coeff_[0] = c;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeff_[0] = Rational(c);
}

LaurentPoly LaurentPoly::monomial(int e, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.coeff_[e] = c;
  return p;
}

Rational LaurentPoly::coeff(int e) const {
  auto it = coeff_.find(e);
  return it == coeff_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (coeff_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return coeff_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (coeff_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return coeff_.rbegin()->first;
}

bool LaurentPoly::is_monomial(int* e, Rational* c) const {
  if (coeff_.size() != 1) return false;
  if (e) *e = coeff_.begin()->first;
  if (c) *c = coeff_.begin()->second;
  return true;
}

void LaurentPoly::add_term(int e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeff_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeff_.erase(it);
  }
}

// ===== ring operations =====

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeff_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeff_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeff_)
    for (const auto& [e2, c2] : o.coeff_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeff_) r.coeff_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : coeff_) r.coeff_[e] = v * c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly acc(1);
  LaurentPoly base = *this;
  while (n != 0) {
    if (n & 1u) acc = acc * base;
    base = base * base;
    n >>= 1u;
  }
  return acc;
}

LaurentPoly LaurentPoly::subst_q_power(int m) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeff_) r.add_term(e * m, c);
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (is_zero()) return {};
  // Shift both operands so they become ordinary polynomials with nonzero
  // constant-free leading structure; record the net exponent offset.
  const int shift_n = min_exp();
  const int shift_d = d.min_exp();
  const int deg_n = max_exp() - shift_n;
  const int deg_d = d.max_exp() - shift_d;
  if (deg_n < deg_d) throw std::domain_error("exact_div: not divisible (degree)");
  std::vector<Rational> num(static_cast<size_t>(deg_n) + 1, Rational(0));
  std::vector<Rational> den(static_cast<size_t>(deg_d) + 1, Rational(0));
  for (const auto& [e, c] : coeff_) num[static_cast<size_t>(e - shift_n)] = c;
  for (const auto& [e, c] : d.coeff_) den[static_cast<size_t>(e - shift_d)] = c;

  std::vector<Rational> quot(static_cast<size_t>(deg_n - deg_d) + 1, Rational(0));
  const Rational& lead = den[static_cast<size_t>(deg_d)];
  for (int k = deg_n - deg_d; k >= 0; --k) {
    const Rational ck = num[static_cast<size_t>(k + deg_d)] / lead;
    if (ck == 0) continue;
    quot[static_cast<size_t>(k)] = ck;
    for (int j = 0; j <= deg_d; ++j)
      num[static_cast<size_t>(k + j)] -= ck * den[static_cast<size_t>(j)];
  }
  for (const Rational& rem : num)
    if (rem != 0) throw std::domain_error("exact_div: nonzero remainder");

  LaurentPoly result;
  const int offset = shift_n - shift_d;
  for (size_t k = 0; k < quot.size(); ++k)
    if (quot[k] != 0) result.coeff_[static_cast<int>(k) + offset] = quot[k];
  return result;
}

// ===== evaluation =====

double LaurentPoly::eval(double q) const {
  if (!(q > 0.0)) throw std::domain_error("eval: q must be > 0");
  double acc = 0.0;
  for (const auto& [e, c] : coeff_) acc += rat_double(c) * std::pow(q, e);
  return acc;
}

Rational LaurentPoly::eval_rational(const Rational& q) const {
  if (q == 0) throw std::domain_error("eval_rational: q must be nonzero");
  Rational acc(0);
  for (const auto& [e, c] : coeff_) acc += c * rat_pow(q, e);
  return acc;
}

// ===== text and JSON =====

std::string LaurentPoly::str() const {
  if (coeff_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeff_) {
    if (!first) os << " + ";
    first = false;
    if (e == 0)
      os << rat_str(c);
    else
      os << rat_str(c) << "*q^" << e;
  }
  return os.str();
}

ordered_json LaurentPoly::to_json() const {
  ordered_json j = ordered_json::object();
  for (const auto& [e, c] : coeff_) j[std::to_string(e)] = rat_str(c);
  return j;
}

LaurentPoly LaurentPoly::from_json(const ordered_json& j) {
  LaurentPoly p;
  for (const auto& [k, v] : j.items())
    p.add_term(std::stoi(k), rat_parse(v.get<std::string>()));
  return p;
}

}  // namespace qgdual
