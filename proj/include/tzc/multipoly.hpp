#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tzc/fp.hpp"
#include "tzc/fq.hpp"
#include "tzc/unipoly.hpp"

namespace tzc {

// Monomial in up to 6 variables, exponents packed into one word (10 bits per
// variable, variable 0 in the highest bits, so raw comparison of `pk` is
// lexicographic). Total degree kept alongside for graded comparisons.
struct Mono {
  static constexpr unsigned kMaxVars = 6;
  static constexpr unsigned kBits = 10;
  static constexpr uint64_t kMask = (1u << kBits) - 1;

  uint64_t pk = 0;
  uint32_t deg = 0;

  static unsigned shift(unsigned var) { return (kMaxVars - 1 - var) * kBits; }

  unsigned exp(unsigned var) const { return (pk >> shift(var)) & kMask; }

  void set_exp(unsigned var, unsigned e) {
    deg += e - exp(var);
    pk = (pk & ~(kMask << shift(var))) | (static_cast<uint64_t>(e) << shift(var));
  }

  Mono times(const Mono& o) const { return Mono{pk + o.pk, deg + o.deg}; }

  // graded lexicographic, z_0 > z_1 > ...
  bool grlex_less(const Mono& o) const {
    if (deg != o.deg) return deg < o.deg;
    return pk < o.pk;
  }
  bool operator==(const Mono& o) const { return pk == o.pk; }
};

// Sparse multivariate polynomial over F_q. Terms sorted grlex-descending,
// no zero coefficients stored. Fixed arity <= 6.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const PrimeField* F, unsigned arity);

  static MultiPoly constant(const PrimeField& F, unsigned arity, const Fp& c);
  static MultiPoly variable(const PrimeField& F, unsigned arity, unsigned var);

  const PrimeField* field() const { return F_; }
  unsigned arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Mono, Fp>>& terms() const { return terms_; }
  const std::pair<Mono, Fp>& leading() const { return terms_.front(); }

  unsigned total_degree() const;
  unsigned degree_in(unsigned var) const;

  Fp coefficient(const std::vector<unsigned>& exps) const;  // zero if absent

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly scaled(const Fp& s) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // element-like interface so that MultiPoly can itself be an evaluation
  // target (polynomial composition via eval)
  MultiPoly zero_like() const { return MultiPoly(F_, arity_); }
  MultiPoly one_like() const { return constant(*F_, arity_, F_->one()); }

  // permutation indexed by target: result variable perm[i] gets the exponent
  // of variable i
  MultiPoly permuted(const std::vector<unsigned>& perm) const;
  bool is_symmetric() const;

  MultiPoly with_arity(unsigned new_arity) const;  // extend or shrink (unused vars only)
  // move each variable i to slot map[i] in a ring of the given arity
  MultiPoly remapped(unsigned new_arity, const std::vector<unsigned>& map) const;

  template <class E>
  E eval(const std::vector<E>& vals) const;

  // evaluate variables 0..arity-2, keep the last variable symbolic
  UniPoly<Fp> partial_eval_last(const std::vector<Fp>& vals) const;

  template <class E>
  UniPoly<E> partial_eval_last_g(const std::vector<E>& vals) const;

  // coefficients with respect to the last variable; entry d has arity
  // `arity()` with the last variable unused
  std::vector<MultiPoly> coeffs_in_last() const;

  std::string str(const std::string& var_prefix = "x") const;
  std::string str(const std::vector<std::string>& names) const;

  void add_term(const Mono& m, const Fp& c);  // builder; call finish() after
  void finish();

  uint64_t content_hash() const;

 private:
  const PrimeField* F_ = nullptr;
  unsigned arity_ = 0;
  std::vector<std::pair<Mono, Fp>> terms_;

  void check_compatible(const MultiPoly& o) const;
};

inline Fp embed_coeff(const Fp& c, const Fp&) { return c; }
inline ExtEl embed_coeff(const Fp& c, const ExtEl& exemplar) {
  return exemplar.field()->from_base(c);
}
inline MultiPoly embed_coeff(const Fp& c, const MultiPoly& exemplar) {
  return MultiPoly::constant(*exemplar.field(), exemplar.arity(), c);
}

inline Fp scale_by(const Fp& v, const Fp& c) { return v * c; }
inline ExtEl scale_by(const ExtEl& v, const Fp& c) { return v.scaled(c); }
inline MultiPoly scale_by(const MultiPoly& v, const Fp& c) { return v.scaled(c); }

template <class E>
E MultiPoly::eval(const std::vector<E>& vals) const {
  if (vals.size() != arity_) throw InvalidInput("evaluation arity mismatch");
  E zero = vals.empty() ? E() : vals[0].zero_like();
  if (terms_.empty()) return zero;
  // power tables per variable
  std::vector<std::vector<E>> pows(arity_);
  for (unsigned v = 0; v < arity_; ++v) {
    unsigned d = degree_in(v);
    pows[v].reserve(d + 1);
    pows[v].push_back(vals[v].one_like());
    for (unsigned k = 1; k <= d; ++k) pows[v].push_back(pows[v].back() * vals[v]);
  }
  E acc = zero;
  for (const auto& [m, c] : terms_) {
    if (m.deg == 0) {
      acc = acc + embed_coeff(c, vals[0]);
      continue;
    }
    E t = zero;
    bool have = false;
    for (unsigned v = 0; v < arity_; ++v) {
      unsigned e = m.exp(v);
      if (!e) continue;
      t = have ? t * pows[v][e] : pows[v][e];
      have = true;
    }
    acc = acc + scale_by(t, c);
  }
  return acc;
}

template <class E>
UniPoly<E> MultiPoly::partial_eval_last_g(const std::vector<E>& vals) const {
  if (vals.size() + 1 != arity_) throw InvalidInput("partial evaluation arity mismatch");
  if (terms_.empty()) return {};
  unsigned last = arity_ - 1;
  std::vector<std::vector<E>> pows(last);
  for (unsigned v = 0; v < last; ++v) {
    unsigned d = degree_in(v);
    pows[v].reserve(d + 1);
    pows[v].push_back(vals[v].one_like());
    for (unsigned k = 1; k <= d; ++k) pows[v].push_back(pows[v].back() * vals[v]);
  }
  std::vector<E> out(degree_in(last) + 1, vals.empty() ? E() : vals[0].zero_like());
  for (const auto& [m, c] : terms_) {
    unsigned d = m.exp(last);
    if (m.deg == d) {
      out[d] = out[d] + embed_coeff(c, vals[0]);
      continue;
    }
    E t = out[0];
    bool have = false;
    for (unsigned v = 0; v < last; ++v) {
      unsigned e = m.exp(v);
      if (!e) continue;
      t = have ? t * pows[v][e] : pows[v][e];
      have = true;
    }
    out[d] = out[d] + scale_by(t, c);
  }
  return UniPoly<E>(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// Resultant of two polynomials with respect to the LAST variable of their
// common ring: determinant of the Sylvester matrix, expanded by cofactors
// over column subsets with memoization (exact, division-free). The result
// does not involve the last variable.
MultiPoly resultant_last_var(const MultiPoly& p, const MultiPoly& q);

// e_i(z_0, ..., z_{n-1}) as a polynomial of the given arity.
MultiPoly elementary_symmetric(const PrimeField& F, unsigned arity, unsigned i);

// Rewrite a symmetric polynomial in the elementary symmetric polynomials:
// returns g with f(z) = g(e_1(z), ..., e_n(z)). Classical leading-term
// elimination under grlex. Throws NotSymmetric if f is not symmetric.
MultiPoly symmetrize(const MultiPoly& f);

}  // namespace tzc
