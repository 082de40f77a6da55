#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace fibtype {

/// Integer polynomial, dense coefficients, index = degree.
struct IntPoly {
  std::vector<mpz_class> c;

  static IntPoly from_coeffs(std::vector<mpz_class> coeffs) {
    IntPoly p{std::move(coeffs)};
    p.trim();
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const mpz_class& lead() const { return c.back(); }

  mpz_class eval(const mpz_class& x) const {
    mpz_class v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
  }
};

namespace detail {

/// Pseudo-remainder: lc(B)^(degA-degB+1) * A mod B. The multiplier is
/// applied exactly degA-degB+1 times even if intermediate degrees drop by
/// more than one; the subresultant divisions rely on that exact power.
inline IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  const mpz_class& lb = b.lead();
  int e = a.degree() - db + 1;
  while (!a.is_zero() && a.degree() >= db) {
    int shift = a.degree() - db;
    mpz_class la = a.lead();
    for (mpz_class& x : a.c) x *= lb;
    for (int i = 0; i <= db; ++i)
      a.c[static_cast<std::size_t>(i + shift)] -= la * b.c[static_cast<std::size_t>(i)];
    a.trim();
    --e;
  }
  if (e > 0 && !a.is_zero()) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (mpz_class& x : a.c) x *= f;
  }
  return a;
}

inline mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace detail

/// |Res(A, B)| via the subresultant pseudo-remainder sequence (exact).
inline mpz_class resultant_magnitude(IntPoly a, IntPoly b) {
  a.trim();
  b.trim();
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() == 0 && b.degree() == 0) return 1;
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 0) return detail::pow_mpz(b.lead(), static_cast<unsigned long>(a.degree()));

  mpz_class g = 1, h = 1;
  while (true) {
    int delta = a.degree() - b.degree();
    IntPoly r = detail::pseudo_rem(a, b);
    a = b;
    if (r.is_zero()) {
      // deg b > 0 and it divides a: common factor of positive degree
      return 0;
    }
    mpz_class div = g * detail::pow_mpz(h, static_cast<unsigned long>(delta));
    for (mpz_class& x : r.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), div.get_mpz_t());
    b = r;
    g = abs(a.lead());
    if (delta >= 1) {
      // h = g^delta / h^(delta-1)
      mpz_class num = detail::pow_mpz(g, static_cast<unsigned long>(delta));
      mpz_class den = detail::pow_mpz(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) break;
  }
  // res = h^(1-deg a) * lc(b)^(deg a), up to sign
  mpz_class num = detail::pow_mpz(abs(b.lead()), static_cast<unsigned long>(a.degree()));
  mpz_class den = detail::pow_mpz(h, static_cast<unsigned long>(a.degree() - 1));
  mpz_class res;
  mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return res;
}

/// f(t) = sum of coefficient * t^degree, finitely supported.
struct RepresenterPolynomial {
  std::map<int, mpz_class> coefficients;

  void add(int degree, long coeff) {
    coefficients[degree] += coeff;
    if (coefficients[degree] == 0) coefficients.erase(degree);
  }

  bool is_zero() const { return coefficients.empty(); }

  /// 1 + t^m - t^k for G_n(m,k).
  static RepresenterPolynomial for_params(int m, int k) {
    RepresenterPolynomial f;
    f.add(0, 1);
    f.add(m, 1);
    f.add(k, -1);
    return f;
  }

  IntPoly dense() const {
    IntPoly p;
    if (coefficients.empty()) return p;
    p.c.assign(static_cast<std::size_t>(coefficients.rbegin()->first) + 1, 0);
    for (const auto& [d, c] : coefficients) p.c[static_cast<std::size_t>(d)] = c;
    p.trim();
    return p;
  }
};

struct AlexanderCheck {
  bool is_alexander = false;
  std::string reason;
};

/// Classical conditions for Alexander polynomials of knots in S^3:
/// |f(1)| = 1 and the coefficient sequence palindromic up to global sign.
inline AlexanderCheck alexander_condition_check(const RepresenterPolynomial& f) {
  if (f.is_zero()) return {false, "zero polynomial"};
  IntPoly p = f.dense();
  // strip a power of t: support may start above degree 0
  int lo = f.coefficients.begin()->first;
  std::vector<mpz_class> c(p.c.begin() + lo, p.c.end());

  mpz_class at1 = 0;
  for (const mpz_class& x : c) at1 += x;
  mpz_class at1_abs = abs(at1);
  if (at1_abs != 1)
    return {false, "|f(1)| = " + at1_abs.get_str() + ", not 1"};

  std::size_t nn = c.size();
  bool pal_plus = true, pal_minus = true;
  for (std::size_t i = 0; i < nn; ++i) {
    if (c[i] != c[nn - 1 - i]) pal_plus = false;
    if (c[i] != -c[nn - 1 - i]) pal_minus = false;
  }
  if (!pal_plus && !pal_minus)
    return {false, "coefficients not palindromic up to sign"};
  return {true, "satisfies f(1)=+-1 and f(t) ~ f(1/t)"};
}

}  // namespace fibtype
