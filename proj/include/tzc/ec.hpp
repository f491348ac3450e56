#pragma once

#include <optional>

#include "tzc/fq.hpp"
#include "tzc/roots.hpp"

namespace tzc {

// Short-Weierstrass curve y^2 = x^3 + Ax + B with coefficients in the
// element field E (F_q or F_{q^n}).
template <class E>
struct CurveEq {
  E A, B;
};

template <class E>
struct Pt {
  bool inf = true;
  E x, y;

  static Pt infinity(const E& exemplar) {
    Pt p;
    p.inf = true;
    p.x = exemplar.zero_like();
    p.y = exemplar.zero_like();
    return p;
  }
  static Pt affine(E x, E y) {
    Pt p;
    p.inf = false;
    p.x = std::move(x);
    p.y = std::move(y);
    return p;
  }

  bool operator==(const Pt& o) const {
    if (inf || o.inf) return inf == o.inf;
    return x == o.x && y == o.y;
  }
  bool operator!=(const Pt& o) const { return !(*this == o); }

  // infinity first, then lexicographic on (x, y)
  int cmp(const Pt& o) const {
    if (inf || o.inf) return inf == o.inf ? 0 : (inf ? -1 : 1);
    int c = x.cmp(o.x);
    return c != 0 ? c : y.cmp(o.y);
  }
};

template <class E>
bool on_curve(const CurveEq<E>& c, const Pt<E>& P) {
  if (P.inf) return true;
  return P.y * P.y == P.x * P.x * P.x + c.A * P.x + c.B;
}

template <class E>
void require_on_curve(const CurveEq<E>& c, const Pt<E>& P) {
  if (!on_curve(c, P)) throw NotOnCurve();
}

template <class E>
Pt<E> pt_neg(const Pt<E>& P) {
  if (P.inf) return P;
  return Pt<E>::affine(P.x, -P.y);
}

template <class E>
Pt<E> pt_add(const CurveEq<E>& c, const Pt<E>& P, const Pt<E>& Q) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  if (P.x == Q.x) {
    if (!(P.y == Q.y) || P.y.is_zero()) return Pt<E>::infinity(P.x);
    // doubling
    E two = P.x.one_like() + P.x.one_like();
    E three = two + P.x.one_like();
    E lam = (three * P.x * P.x + c.A) / (two * P.y);
    E x3 = lam * lam - P.x - Q.x;
    E y3 = lam * (P.x - x3) - P.y;
    return Pt<E>::affine(x3, y3);
  }
  E lam = (Q.y - P.y) / (Q.x - P.x);
  E x3 = lam * lam - P.x - Q.x;
  E y3 = lam * (P.x - x3) - P.y;
  return Pt<E>::affine(x3, y3);
}

template <class E>
Pt<E> pt_sub(const CurveEq<E>& c, const Pt<E>& P, const Pt<E>& Q) {
  return pt_add(c, P, pt_neg(Q));
}

template <class E>
Pt<E> scalar_mul(const CurveEq<E>& c, const mpz_class& k, const Pt<E>& P) {
  if (P.inf || k == 0) return Pt<E>::infinity(P.inf ? c.A : P.x);
  Pt<E> base = k < 0 ? pt_neg(P) : P;
  mpz_class e = abs(k);
  Pt<E> acc = Pt<E>::infinity(base.x);
  size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = nbits; i-- > 0;) {
    acc = pt_add(c, acc, acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = pt_add(c, acc, base);
  }
  return acc;
}

using PtExt = Pt<ExtEl>;
using CurveExt = CurveEq<ExtEl>;
using CurveFp = CurveEq<Fp>;

inline CurveExt curve_to_ext(const CurveFp& c, const ExtField& K) {
  return CurveExt{K.from_base(c.A), K.from_base(c.B)};
}

inline PtExt pt_to_ext(const Pt<Fp>& P, const ExtField& K) {
  if (P.inf) return PtExt::infinity(K.zero());
  return PtExt::affine(K.from_base(P.x), K.from_base(P.y));
}

// (X, Y) -> (X^q^i, Y^q^i); a group endomorphism.
inline PtExt frobenius_point(const PtExt& P, unsigned i) {
  if (P.inf) return P;
  return PtExt::affine(P.x.frobenius(i), P.y.frobenius(i));
}

// Tr(P) = P + phi(P) + ... + phi^(n-1)(P); lands in E(F_q) (asserted).
PtExt trace(const CurveExt& c, const PtExt& P);

bool in_trace_zero(const CurveExt& c, const PtExt& P);

// The two points with the given x-coordinate, if any; first has the
// lexicographically smaller y.
std::optional<std::pair<PtExt, PtExt>> lift_x(const CurveExt& c, const ExtEl& x);
std::optional<std::pair<Pt<Fp>, Pt<Fp>>> lift_x_base(const CurveFp& c, const Fp& x);

struct GroupOrders {
  mpz_class n1;  // |E(F_q)|
  mpz_class nn;  // |E(F_{q^n})|
  mpz_class tn;  // |T_n| = nn / n1
};

// Extend |E(F_q)| to |E(F_{q^n})| via the Frobenius-trace recurrence
// a_0 = 2, a_1 = t, a_{k+1} = t a_k - q a_{k-1}, |E(F_{q^k})| = q^k + 1 - a_k.
// Throws InternalError when n1 does not divide nn (a counting bug).
GroupOrders group_orders_from_n1(const mpz_class& q, unsigned n, const mpz_class& n1);

// Exhaustive |E(F_q)| for word-sized small q (guarded).
mpz_class count_points_exhaustive(const PrimeField& F, const CurveFp& c);

// |E(F_q)| via baby-step giant-step point orders; intended for q up to
// ~2^80. Deterministic given the rng seed.
mpz_class count_points_bsgs(const PrimeField& F, const CurveFp& c, Rng& rng);

// E[3](F_q): rational roots of the 3-division polynomial
// 3x^4 + 6Ax^2 + 12Bx - A^2 that lift to rational points, plus infinity.
std::vector<Pt<Fp>> three_torsion_rational(const PrimeField& F, const CurveFp& c);

// E[2] intersected with T_n: the points (x, 0) with x in F_{q^n} of trace
// zero, plus infinity.
std::vector<PtExt> two_torsion_trace_zero(const CurveFp& c, const ExtField& K);

// x-coordinates of Q + R with O != Q in E[3](F_q) and R in E[2] cap T_5.
// At most 16 elements (asserted). n = 5 only.
std::vector<ExtEl> exceptional_set(const PrimeField& F, const CurveFp& c, const ExtField& K);

// All points of E(F_q) (small q; exhaustive x sweep).
std::vector<Pt<Fp>> enumerate_points(const PrimeField& F, const CurveFp& c);

// All points of E(F_{q^n}) (small q^n; exhaustive x sweep).
std::vector<PtExt> enumerate_ext_points(const CurveFp& c, const ExtField& K);

}  // namespace tzc
