#include "tzc/roots.hpp"

#include <ostream>

namespace tzc {

uint64_t poly_hash(const UniPoly<Fp>& f) {
  uint64_t h = 0xcbf29ce484222325ULL ^ f.c.size();
  for (const auto& e : f.c) h = hash_bytes_of(e, h);
  return h;
}

uint64_t poly_hash(const UniPoly<ExtEl>& f) {
  uint64_t h = 0x84222325cbf29ce4ULL ^ f.c.size();
  for (const auto& e : f.c) h = hash_bytes_of(e, h);
  return h;
}

std::ostream& operator<<(std::ostream& os, const UniPoly<Fp>& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (int i = f.deg(); i >= 0; --i) {
    if (f.c[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << f.c[i].str();
    if (i > 0) os << "*x^" << i;
  }
  return os;
}

UniPoly<ExtEl> lift_to_ext(const UniPoly<Fp>& f, const ExtField& K) {
  std::vector<ExtEl> out(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) out[i] = K.from_base(f.c[i]);
  return UniPoly<ExtEl>(std::move(out));
}

namespace {

// v^q mod work, for v with coefficients in F_{q^n}: freshman's dream gives
// v^q = sum v_i^q x^(iq), so apply Frobenius to the coefficients and
// compose with xq = x^q mod work.
UniPoly<ExtEl> semilinear_q(const UniPoly<ExtEl>& v, const UniPoly<ExtEl>& xq,
                            const UniPoly<ExtEl>& work) {
  UniPoly<ExtEl> vq = v;
  for (auto& coef : vq.c) coef = coef.frobenius(1);
  return compose_mod(vq, xq, work);
}

// One root in F_{q^n} of h, irreducible over F_q of degree n. Splits h over
// the extension by Cantor–Zassenhaus, with u^((q^n-1)/2) evaluated as
// (u^(1+q+...+q^(n-1)))^((q-1)/2) so only (q-1)/2-sized exponents occur.
ExtEl root_of_irreducible(const UniPoly<Fp>& h, const ExtField& K) {
  const unsigned n = K.degree();
  const mpz_class& q = K.base().modulus();
  UniPoly<Fp> xq_base = pow_mod(poly_x(h.c[0]), q, h);
  UniPoly<ExtEl> work = monic(lift_to_ext(h, K));
  Rng rng(poly_hash(h) ^ 0x9e3779b97f4a7c15ULL);
  mpz_class half = (q - 1) / 2;
  const ExtEl one = K.one();

  int guard = 0;
  while (work.deg() > 1) {
    if (++guard > 256) throw InternalError("extension splitting did not converge");
    UniPoly<ExtEl> xq = lift_to_ext(xq_base, K) % work;
    std::vector<ExtEl> uc(work.deg());
    for (auto& e : uc) e = random_ext(K, rng);
    UniPoly<ExtEl> u(std::move(uc));
    if (u.is_zero()) continue;
    UniPoly<ExtEl> acc = u % work;
    UniPoly<ExtEl> v = acc;
    for (unsigned i = 1; i < n; ++i) {
      v = semilinear_q(v, xq, work);
      acc = (acc * v) % work;
    }
    UniPoly<ExtEl> w = pow_mod(acc, half, work) - poly_const(one);
    if (w.is_zero()) continue;
    UniPoly<ExtEl> g = gcd(w, work);
    if (g.deg() <= 0 || g.deg() >= work.deg()) continue;
    UniPoly<ExtEl> other = work / g;
    work = (g.deg() <= other.deg()) ? g : other;
  }
  if (work.deg() != 1) throw InternalError("no linear factor found over the extension");
  return -(monic(work).c[0]);
}

// Split a product of distinct irreducible degree-d factors over F_q.
void split_equal_degree(const UniPoly<Fp>& g, unsigned d, Rng& rng,
                        std::vector<UniPoly<Fp>>& out) {
  if (g.deg() == static_cast<int>(d)) {
    out.push_back(monic(g));
    return;
  }
  const mpz_class& q = g.c[0].field()->modulus();
  mpz_class e = 1;
  for (unsigned i = 0; i < d; ++i) e *= q;
  e = (e - 1) / 2;
  for (int attempt = 0; attempt < 128; ++attempt) {
    std::vector<Fp> uc(g.deg());
    for (auto& c : uc) c = random_fp(*g.c[0].field(), rng);
    UniPoly<Fp> u(std::move(uc));
    if (u.deg() < 1) continue;
    UniPoly<Fp> w = pow_mod(u, e, g) - poly_const(g.c[0].one_like());
    if (w.is_zero()) continue;
    UniPoly<Fp> h = gcd(w, g);
    if (h.deg() > 0 && h.deg() < g.deg()) {
      split_equal_degree(h, d, rng, out);
      split_equal_degree(g / h, d, rng, out);
      return;
    }
  }
  throw InternalError("equal-degree splitting did not converge");
}

}  // namespace

std::vector<ExtEl> roots_in_ext(const UniPoly<Fp>& f, const ExtField& K) {
  if (f.is_zero()) throw InvalidInput("roots_in_ext(0) is undefined");
  std::vector<ExtEl> out;
  if (f.deg() == 0) return out;
  const unsigned n = K.degree();
  const mpz_class& q = K.base().modulus();

  UniPoly<Fp> fs = squarefree_part(f);
  UniPoly<Fp> x = poly_x(fs.c[0]);
  UniPoly<Fp> xq = pow_mod(x, q, fs);

  // roots in the base field
  UniPoly<Fp> lin = gcd(xq - x, fs);
  if (lin.deg() > 0) {
    Rng rng(poly_hash(f));
    std::vector<Fp> base_roots;
    detail::split_linear(lin, q, rng, base_roots);
    for (const auto& r : base_roots) out.push_back(K.from_base(r));
    fs = fs / lin;
  }

  // factors of degree exactly n split completely over F_{q^n}
  if (fs.deg() > 0) {
    UniPoly<Fp> xqe = pow_mod(x, q, fs);
    UniPoly<Fp> xqi = xqe;
    for (unsigned i = 1; i < n; ++i) xqi = compose_mod(xqi, xqe, fs);
    UniPoly<Fp> gn = gcd(xqi - x, fs);
    if (gn.deg() > 0) {
      if (gn.deg() % n != 0) throw InternalError("distinct-degree factor size mismatch");
      std::vector<UniPoly<Fp>> factors;
      Rng rng(poly_hash(f) ^ 0xa5a5a5a5a5a5a5a5ULL);
      split_equal_degree(gn, n, rng, factors);
      for (const auto& h : factors) {
        ExtEl r = root_of_irreducible(h, K);
        for (unsigned i = 0; i < n; ++i) out.push_back(r.frobenius(i));
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const ExtEl& a, const ExtEl& b) { return a.cmp(b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tzc
