#pragma once

#include <algorithm>
#include <vector>

#include "tzc/error.hpp"
#include "tzc/fp.hpp"
#include "tzc/fq.hpp"
#include "tzc/rng.hpp"

namespace tzc {

inline Fp random_like(const Fp& exemplar, Rng& rng) { return random_fp(*exemplar.field(), rng); }
inline ExtEl random_like(const ExtEl& exemplar, Rng& rng) { return random_ext(*exemplar.field(), rng); }

// Dense univariate polynomial over a field element type E (Fp or ExtEl).
// Coefficients ascending by degree, trailing zeros stripped; the zero
// polynomial is the empty vector. Degree -1 denotes zero.
template <class E>
struct UniPoly {
  std::vector<E> c;

  UniPoly() = default;
  explicit UniPoly(std::vector<E> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const E& lc() const { return c.back(); }

  E eval(const E& x) const {
    if (c.empty()) return x.zero_like();
    E acc = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  bool operator==(const UniPoly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
      if (!(c[i] == o.c[i])) return false;
    return true;
  }
};

template <class E>
UniPoly<E> poly_x(const E& exemplar) {
  return UniPoly<E>({exemplar.zero_like(), exemplar.one_like()});
}

template <class E>
UniPoly<E> poly_const(const E& v) {
  return UniPoly<E>({v});
}

template <class E>
UniPoly<E> operator+(const UniPoly<E>& a, const UniPoly<E>& b) {
  std::vector<E> out(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.c.size() && i < b.c.size())
      out[i] = a.c[i] + b.c[i];
    else if (i < a.c.size())
      out[i] = a.c[i];
    else
      out[i] = b.c[i];
  }
  return UniPoly<E>(std::move(out));
}

template <class E>
UniPoly<E> operator-(const UniPoly<E>& a) {
  std::vector<E> out(a.c.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = -a.c[i];
  return UniPoly<E>(std::move(out));
}

template <class E>
UniPoly<E> operator-(const UniPoly<E>& a, const UniPoly<E>& b) {
  return a + (-b);
}

template <class E>
UniPoly<E> operator*(const UniPoly<E>& a, const UniPoly<E>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<E> out(a.c.size() + b.c.size() - 1, a.c[0].zero_like());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j].is_zero()) continue;
      out[i + j] = out[i + j] + a.c[i] * b.c[j];
    }
  }
  return UniPoly<E>(std::move(out));
}

template <class E>
UniPoly<E> scale(const UniPoly<E>& a, const E& s) {
  std::vector<E> out(a.c.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.c[i] * s;
  return UniPoly<E>(std::move(out));
}

template <class E>
UniPoly<E> monic(const UniPoly<E>& a) {
  if (a.is_zero()) return a;
  if (a.lc().is_one()) return a;
  return scale(a, a.lc().inv());
}

template <class E>
void divrem(const UniPoly<E>& a, const UniPoly<E>& b, UniPoly<E>& q, UniPoly<E>& r) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  r = a;
  q = {};
  if (a.deg() < b.deg()) return;
  E binv = b.lc().inv();
  q.c.assign(a.deg() - b.deg() + 1, b.lc().zero_like());
  while (!r.is_zero() && r.deg() >= b.deg()) {
    int shift = r.deg() - b.deg();
    E coef = r.lc() * binv;
    q.c[shift] = coef;
    for (int i = 0; i <= b.deg(); ++i)
      r.c[i + shift] = r.c[i + shift] - coef * b.c[i];
    r.normalize();
  }
  q.normalize();
}

template <class E>
UniPoly<E> operator%(const UniPoly<E>& a, const UniPoly<E>& b) {
  UniPoly<E> q, r;
  divrem(a, b, q, r);
  return r;
}

template <class E>
UniPoly<E> operator/(const UniPoly<E>& a, const UniPoly<E>& b) {
  UniPoly<E> q, r;
  divrem(a, b, q, r);
  return q;
}

// Monic gcd. gcd(f, 0) = monic(f); gcd(0, 0) is invalid.
template <class E>
UniPoly<E> gcd(UniPoly<E> a, UniPoly<E> b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    UniPoly<E> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class E>
UniPoly<E> derivative(const UniPoly<E>& a) {
  if (a.deg() <= 0) return {};
  std::vector<E> out(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) {
    E k = a.c[i].zero_like();
    E one = a.c[i].one_like();
    for (size_t j = 0; j < i; ++j) k = k + one;  // i as a field element
    out[i - 1] = a.c[i] * k;
  }
  return UniPoly<E>(std::move(out));
}

template <class E>
UniPoly<E> squarefree_part(const UniPoly<E>& a) {
  if (a.deg() <= 1) return monic(a);
  UniPoly<E> d = derivative(a);
  if (d.is_zero()) throw InternalError("vanishing derivative in squarefree_part");
  return monic(a / gcd(a, d));
}

template <class E>
UniPoly<E> pow_mod(const UniPoly<E>& base, const mpz_class& e, const UniPoly<E>& m) {
  UniPoly<E> acc = poly_const(m.lc().one_like());
  if (e == 0) return acc % m;
  UniPoly<E> b = base % m;
  size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = nbits; i-- > 0;) {
    acc = (acc * acc) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * b) % m;
  }
  return acc;
}

// f(g) mod m by Horner.
template <class E>
UniPoly<E> compose_mod(const UniPoly<E>& f, const UniPoly<E>& g, const UniPoly<E>& m) {
  UniPoly<E> acc;
  for (size_t i = f.c.size(); i-- > 0;) {
    acc = (acc * g) % m;
    acc = acc + poly_const(f.c[i]);
  }
  return acc % m;
}

// Resultant of two polynomials of degree >= 1, normalized so that
// resultant(x - a, x - b) = b - a.
template <class E>
E resultant(const UniPoly<E>& f, const UniPoly<E>& g) {
  if (f.deg() < 1 || g.deg() < 1) throw InvalidInput("resultant needs degrees >= 1");
  // R(f, g) = lc(g)^deg f * prod f(beta) over the roots beta of g
  E acc = f.c[0].one_like();
  UniPoly<E> a = f, b = g;
  bool done = false;
  E res = acc;
  while (!done) {
    if (b.deg() == 0) {
      res = acc * b.c[0].pow(mpz_class(a.deg()));
      done = true;
    } else if (a.deg() == 0) {
      res = acc * a.c[0].pow(mpz_class(b.deg()));
      done = true;
    } else {
      UniPoly<E> r = a % b;
      if (r.is_zero()) return f.c[0].zero_like();
      // R(a,b) = lc(b)^(deg a - deg r) * (-1)^(deg r * deg b) * R(b, r)
      acc = acc * b.lc().pow(mpz_class(a.deg() - r.deg()));
      if ((r.deg() * b.deg()) % 2 == 1) acc = -acc;
      a = std::move(b);
      b = std::move(r);
    }
  }
  return res;
}

uint64_t poly_hash(const UniPoly<Fp>& f);
uint64_t poly_hash(const UniPoly<ExtEl>& f);

namespace detail {

// Equal-degree splitting into linear factors: f is a monic product of
// distinct linears over the coefficient field (odd order Q).
template <class E>
void split_linear(const UniPoly<E>& f, const mpz_class& Q, Rng& rng, std::vector<E>& out) {
  if (f.deg() <= 0) return;
  if (f.deg() == 1) {
    out.push_back(-f.c[0]);
    return;
  }
  mpz_class half = (Q - 1) / 2;
  for (int attempt = 0; attempt < 128; ++attempt) {
    UniPoly<E> u({random_like(f.c[0], rng), f.c[0].one_like()});
    UniPoly<E> w = pow_mod(u, half, f) - poly_const(f.c[0].one_like());
    if (w.is_zero()) continue;
    UniPoly<E> h = gcd(w, f);
    if (h.deg() > 0 && h.deg() < f.deg()) {
      split_linear(h, Q, rng, out);
      split_linear(f / h, Q, rng, out);
      return;
    }
  }
  throw InternalError("equal-degree splitting did not converge");
}

}  // namespace detail

// All roots of f lying in the coefficient field, sorted canonically
// (numeric order for F_q, lexicographic coordinates for extensions).
// gcd(f, x^Q - x) then equal-degree splitting; deterministic via a PRNG
// seeded from the coefficients.
template <class E>
std::vector<E> roots_in_field(const UniPoly<E>& f) {
  if (f.is_zero()) throw InvalidInput("roots_in_field(0) is undefined");
  std::vector<E> out;
  if (f.deg() == 0) return out;
  UniPoly<E> fs = squarefree_part(f);
  mpz_class Q = fs.c[0].field_order();
  UniPoly<E> xq = pow_mod(poly_x(fs.c[0]), Q, fs);
  UniPoly<E> lin = gcd(xq - poly_x(fs.c[0]), fs);
  if (lin.deg() <= 0) return out;
  Rng rng(poly_hash(f));
  detail::split_linear(lin, Q, rng, out);
  std::sort(out.begin(), out.end(), [](const E& a, const E& b) { return a.cmp(b) < 0; });
  return out;
}

std::ostream& operator<<(std::ostream& os, const UniPoly<Fp>& f);

}  // namespace tzc
