#include "tzc/semaev.hpp"

namespace tzc {

namespace {

void check_nonsingular(const Fp& A, const Fp& B) {
  const PrimeField& F = *A.field();
  Fp disc = F.make_int(4) * A * A * A + F.make_int(27) * B * B;
  if (disc.is_zero()) throw InvalidCurve("singular curve: 4A^3 + 27B^2 = 0");
}

// f_3 in the ring of the given arity, on the variable slots v1, v2, v3:
// (z1-z2)^2 z3^2 - 2((z1+z2)(z1 z2 + A) + 2B) z3 + (z1 z2 - A)^2 - 4B(z1+z2)
MultiPoly f3_on(const Fp& A, const Fp& B, unsigned arity, unsigned v1, unsigned v2,
                unsigned v3) {
  const PrimeField& F = *A.field();
  MultiPoly z1 = MultiPoly::variable(F, arity, v1);
  MultiPoly z2 = MultiPoly::variable(F, arity, v2);
  MultiPoly z3 = MultiPoly::variable(F, arity, v3);
  auto c = [&](long v) { return MultiPoly::constant(F, arity, F.make_int(v)); };
  MultiPoly cA = MultiPoly::constant(F, arity, A);
  MultiPoly cB = MultiPoly::constant(F, arity, B);
  MultiPoly d = z1 - z2;
  MultiPoly s = z1 + z2;
  MultiPoly p = z1 * z2;
  return d * d * z3 * z3 - c(2) * (s * (p + cA) + c(2) * cB) * z3 + (p - cA) * (p - cA) -
         c(4) * cB * s;
}

}  // namespace

MultiPoly summation_polynomial(unsigned m, const Fp& A, const Fp& B) {
  check_nonsingular(A, B);
  const PrimeField& F = *A.field();
  if (m == 3) return f3_on(A, B, 3, 0, 1, 2);
  if (m == 4) {
    // eliminate variable 4 of the 5-variable ring (z1, z2, z3, z4, z)
    MultiPoly a = f3_on(A, B, 5, 0, 1, 4);
    MultiPoly b = f3_on(A, B, 5, 2, 3, 4);
    return resultant_last_var(a, b).with_arity(4);
  }
  if (m == 5) {
    MultiPoly f4 = summation_polynomial(4, A, B);
    // f_4(z1, z2, z3, z) in the 6-variable ring (z1..z5, z)
    MultiPoly a = f4.remapped(6, {0, 1, 2, 5});
    MultiPoly b = f3_on(A, B, 6, 3, 4, 5);
    return resultant_last_var(a, b).with_arity(5);
  }
  throw InvalidInput("summation polynomial degree must be 3, 4 or 5");
}

MultiPoly symmetrized_summation(unsigned n, const Fp& A, const Fp& B) {
  return symmetrize(summation_polynomial(n, A, B));
}

namespace {

// Polynomial with coefficients in F_{q^n}, stored as zeta-power components
// over F_q[x_0..x_{n-1}]. Exactly what the Weil restriction manipulates.
struct ExtMPoly {
  std::vector<MultiPoly> comp;

  static ExtMPoly zero(const PrimeField& F, unsigned n, unsigned arity) {
    ExtMPoly r;
    r.comp.assign(n, MultiPoly(&F, arity));
    return r;
  }
};

ExtMPoly add(const ExtMPoly& a, const ExtMPoly& b) {
  ExtMPoly r = a;
  for (size_t i = 0; i < r.comp.size(); ++i) r.comp[i] += b.comp[i];
  return r;
}

ExtMPoly mul(const ExtMPoly& a, const ExtMPoly& b, const Fp& mu) {
  const unsigned n = a.comp.size();
  ExtMPoly r = ExtMPoly::zero(*a.comp[0].field(), n, a.comp[0].arity());
  for (unsigned i = 0; i < n; ++i) {
    if (a.comp[i].is_zero()) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (b.comp[j].is_zero()) continue;
      MultiPoly prod = a.comp[i] * b.comp[j];
      unsigned k = i + j;
      if (k >= n) {
        k -= n;
        prod = prod.scaled(mu);
      }
      r.comp[k] += prod;
    }
  }
  return r;
}

ExtMPoly scale(const ExtMPoly& a, const Fp& s) {
  ExtMPoly r = a;
  for (auto& c : r.comp) c = c.scaled(s);
  return r;
}

// The form x^(q^i) in Weil coordinates: component j is twist(i,j) * x_j.
ExtMPoly conjugate_form(const ExtField& K, unsigned i, unsigned arity) {
  const PrimeField& F = K.base();
  const unsigned n = K.degree();
  ExtMPoly r = ExtMPoly::zero(F, n, arity);
  for (unsigned j = 0; j < n; ++j)
    r.comp[j] = MultiPoly::variable(F, arity, j).scaled(K.twist(i, j));
  return r;
}

// Evaluate an F_q-coefficient polynomial at ExtMPoly arguments.
ExtMPoly eval_at_forms(const MultiPoly& f, const std::vector<ExtMPoly>& args, const Fp& mu) {
  const PrimeField& F = *f.field();
  const unsigned n = args[0].comp.size();
  const unsigned arity = args[0].comp[0].arity();
  // power tables
  std::vector<std::vector<ExtMPoly>> pows(args.size());
  for (size_t v = 0; v < args.size(); ++v) {
    unsigned d = f.degree_in(v);
    pows[v].reserve(d + 1);
    ExtMPoly one = ExtMPoly::zero(F, n, arity);
    one.comp[0] = MultiPoly::constant(F, arity, F.one());
    pows[v].push_back(one);
    for (unsigned k = 1; k <= d; ++k) pows[v].push_back(mul(pows[v].back(), args[v], mu));
  }
  ExtMPoly acc = ExtMPoly::zero(F, n, arity);
  for (const auto& [m, c] : f.terms()) {
    ExtMPoly t = pows[0][m.exp(0)];
    for (size_t v = 1; v < args.size(); ++v) {
      unsigned e = m.exp(v);
      if (e) t = mul(t, pows[v][e], mu);
    }
    acc = add(acc, scale(t, c));
  }
  return acc;
}

}  // namespace

MultiPoly weil_restrict_f3(const Fp& A, const Fp& B, const ExtField& K) {
  if (K.degree() != 3) throw InvalidInput("weil_restrict_f3 needs a cubic extension");
  check_nonsingular(A, B);
  MultiPoly f3 = summation_polynomial(3, A, B);
  std::vector<ExtMPoly> args;
  for (unsigned i = 0; i < 3; ++i) args.push_back(conjugate_form(K, i, 3));
  ExtMPoly r = eval_at_forms(f3, args, K.mu());
  for (unsigned j = 1; j < 3; ++j)
    if (!r.comp[j].is_zero())
      throw InternalError("Weil restriction produced more than one equation");
  return r.comp[0];
}

std::vector<MultiPoly> restricted_symmetric_functions(const ExtField& K) {
  const PrimeField& F = K.base();
  const unsigned n = K.degree();
  std::vector<ExtMPoly> conj;
  for (unsigned i = 0; i < n; ++i) conj.push_back(conjugate_form(K, i, n));

  // elementary symmetric functions of the n conjugate forms
  std::vector<ExtMPoly> e(n + 1, ExtMPoly::zero(F, n, n));
  e[0].comp[0] = MultiPoly::constant(F, n, F.one());
  for (unsigned v = 0; v < n; ++v)
    for (unsigned k = std::min(n, v + 1); k >= 1; --k)
      e[k] = add(e[k], mul(conj[v], e[k - 1], K.mu()));

  std::vector<MultiPoly> out;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j < n; ++j)
      if (!e[i].comp[j].is_zero())
        throw InternalError("restricted symmetric function is not F_q-rational");
    const MultiPoly& ei = e[i].comp[0];
    for (const auto& [m, c] : ei.terms())
      if (m.deg != i) throw InternalError("restricted symmetric function is not homogeneous");
    out.push_back(ei);
  }
  return out;
}

}  // namespace tzc
