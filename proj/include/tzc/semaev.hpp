#pragma once

#include "tzc/multipoly.hpp"

namespace tzc {

// m-th summation polynomial of y^2 = x^3 + Ax + B over F_q, m in {3, 4, 5}:
// f_3 from the closed form, f_4 = Res_z(f_3(z1,z2,z), f_3(z3,z4,z)),
// f_5 = Res_z(f_4(z1,z2,z3,z), f_3(z4,z5,z)). Symmetric, degree 2^(m-2) in
// each variable, total degree (m-1) 2^(m-2); vanishes exactly on x-coordinate
// tuples liftable to curve points summing to the identity.
// Throws InvalidCurve when 4A^3 + 27B^2 = 0.
MultiPoly summation_polynomial(unsigned m, const Fp& A, const Fp& B);

// g_n = symmetrize(f_n): f_n(z) = g_n(e_1(z), ..., e_n(z)).
MultiPoly symmetrized_summation(unsigned n, const Fp& A, const Fp& B);

// The single F_q-equation obtained from f_3(x, x^q, x^(q^2)) in Weil
// coordinates x = x_0 + x_1 zeta + x_2 zeta^2, reduced modulo x_i^q - x_i.
// The other two zeta-components vanish identically (asserted).
MultiPoly weil_restrict_f3(const Fp& A, const Fp& B, const ExtField& K);

// e~_1, ..., e~_n with s_i = e~_i(x_0, ..., x_{n-1}): the Weil restriction of
// the elementary symmetric functions of the Frobenius conjugates of x.
// Each e~_i is homogeneous of degree i (asserted).
std::vector<MultiPoly> restricted_symmetric_functions(const ExtField& K);

// Gaussian-elimination determinant over a field element type. Consumes m.
template <class E>
E det_in_field(std::vector<std::vector<E>>& m, const E& one) {
  const size_t N = m.size();
  E det = one;
  for (size_t col = 0; col < N; ++col) {
    size_t pivot = N;
    for (size_t r = col; r < N; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == N) return one.zero_like();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    E inv = m[col][col].inv();
    for (size_t r = col + 1; r < N; ++r) {
      if (m[r][col].is_zero()) continue;
      E factor = m[r][col] * inv;
      for (size_t j = col; j < N; ++j) m[r][j] = m[r][j] - factor * m[col][j];
    }
  }
  return det;
}

// Evaluates f_m at concrete x-coordinates without expanding f_4 or f_5:
// f_3 from its closed form, f_4 and f_5 as numeric Sylvester determinants of
// partial evaluations (entrywise specialization of the symbolic matrix, so
// they agree with summation_polynomial(m,...) identically, degree padding
// included).
class SummationEvaluator {
 public:
  SummationEvaluator(const Fp& A, const Fp& B)
      : f3_(summation_polynomial(3, A, B)), f4_(summation_polynomial(4, A, B)) {}

  const MultiPoly& f3() const { return f3_; }
  const MultiPoly& f4() const { return f4_; }

  template <class E>
  E eval(const std::vector<E>& xs) const {
    if (xs.size() == 3) return f3_.eval(xs);
    if (xs.size() == 4) {
      UniPoly<E> p = f3_.partial_eval_last_g(std::vector<E>{xs[0], xs[1]});
      UniPoly<E> q = f3_.partial_eval_last_g(std::vector<E>{xs[2], xs[3]});
      return sylvester_det(p, 2, q, 2, xs[0]);
    }
    if (xs.size() != 5) throw InvalidInput("summation evaluation needs 3, 4 or 5 points");
    UniPoly<E> p = f4_.partial_eval_last_g(std::vector<E>{xs[0], xs[1], xs[2]});
    UniPoly<E> q = f3_.partial_eval_last_g(std::vector<E>{xs[3], xs[4]});
    return sylvester_det(p, 4, q, 2, xs[0]);
  }

 private:
  MultiPoly f3_, f4_;

  // resultant of p (symbolic degree m) and q (symbolic degree l) in their
  // variable, with coefficients padded to the symbolic degrees
  template <class E>
  static E sylvester_det(const UniPoly<E>& p, int m, const UniPoly<E>& q, int l,
                         const E& exemplar) {
    const E zero = exemplar.zero_like();
    auto coef = [&](const UniPoly<E>& f, int d) { return d <= f.deg() ? f.c[d] : zero; };
    const int N = m + l;
    std::vector<std::vector<E>> M(N, std::vector<E>(N, zero));
    for (int r = 0; r < m; ++r)
      for (int j = 0; j <= l; ++j) M[r][r + j] = coef(q, l - j);
    for (int r = 0; r < l; ++r)
      for (int j = 0; j <= m; ++j) M[m + r][r + j] = coef(p, m - j);
    return det_in_field(M, exemplar.one_like());
  }
};

}  // namespace tzc
