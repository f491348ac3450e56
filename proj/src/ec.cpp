#include "tzc/ec.hpp"

#include <algorithm>
#include <unordered_map>

namespace tzc {

PtExt trace(const CurveExt& c, const PtExt& P) {
  if (P.inf) return P;
  const unsigned n = P.x.field()->degree();
  PtExt acc = P;
  for (unsigned i = 1; i < n; ++i) acc = pt_add(c, acc, frobenius_point(P, i));
  if (!acc.inf && (!acc.x.is_rational() || !acc.y.is_rational()))
    throw InternalError("trace left the base field");
  return acc;
}

bool in_trace_zero(const CurveExt& c, const PtExt& P) { return trace(c, P).inf; }

std::optional<std::pair<PtExt, PtExt>> lift_x(const CurveExt& c, const ExtEl& x) {
  ExtEl rhs = x * x * x + c.A * x + c.B;
  auto r = ext_sqrt(rhs);
  if (!r.has_value()) return std::nullopt;
  return std::make_pair(PtExt::affine(x, r->first), PtExt::affine(x, r->second));
}

std::optional<std::pair<Pt<Fp>, Pt<Fp>>> lift_x_base(const CurveFp& c, const Fp& x) {
  Fp rhs = x * x * x + c.A * x + c.B;
  auto r = sqrt(rhs);
  if (!r.has_value()) return std::nullopt;
  return std::make_pair(Pt<Fp>::affine(x, r->first), Pt<Fp>::affine(x, r->second));
}

GroupOrders group_orders_from_n1(const mpz_class& q, unsigned n, const mpz_class& n1) {
  mpz_class t = q + 1 - n1;
  mpz_class a_prev = 2, a = t;
  for (unsigned k = 1; k < n; ++k) {
    mpz_class a_next = t * a - q * a_prev;
    a_prev = a;
    a = a_next;
  }
  mpz_class qn = 1;
  for (unsigned k = 0; k < n; ++k) qn *= q;
  GroupOrders o;
  o.n1 = n1;
  o.nn = qn + 1 - a;
  mpz_class rem;
  mpz_fdiv_qr(o.tn.get_mpz_t(), rem.get_mpz_t(), o.nn.get_mpz_t(), o.n1.get_mpz_t());
  if (rem != 0) throw InternalError("|E(F_q)| does not divide |E(F_{q^n})|");
  return o;
}

mpz_class count_points_exhaustive(const PrimeField& F, const CurveFp& c) {
  if (F.modulus() > 4 * 1000 * 1000)
    throw InvalidInput("exhaustive point count is limited to small fields");
  uint64_t q = F.modulus_word();
  mpz_class count = 1;  // infinity
  for (uint64_t xv = 0; xv < q; ++xv) {
    Fp x = F.from_word(xv);
    Fp rhs = x * x * x + c.A * x + c.B;
    if (rhs.is_zero())
      count += 1;
    else if (is_nth_power(rhs, 2))
      count += 2;
  }
  return count;
}

namespace {

// All N in the Hasse window [q+1-2 sqrt(q), q+1+2 sqrt(q)] with N*P = O,
// by baby-step giant-step on the window offset.
std::vector<mpz_class> window_annihilators(const PrimeField& F, const CurveFp& c,
                                           const Pt<Fp>& P) {
  const mpz_class& q = F.modulus();
  mpz_class two_sqrt;
  mpz_sqrt(two_sqrt.get_mpz_t(), mpz_class(4 * q).get_mpz_t());
  two_sqrt += 1;
  mpz_class lo = q + 1 - two_sqrt;
  mpz_class width = 2 * two_sqrt;
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), width.get_mpz_t());
  s += 1;

  // R = -(lo) P; looking for j in [0, width] with j P = R, j = a s + b
  Pt<Fp> R = pt_neg(scalar_mul(c, lo, P));
  Pt<Fp> sP = scalar_mul(c, s, P);

  std::unordered_map<std::string, std::vector<unsigned long>> baby;
  auto key_of = [](const Pt<Fp>& T) {
    if (T.inf) return std::string("inf");
    std::vector<unsigned char> buf;
    T.x.to_bytes(buf);
    T.y.to_bytes(buf);
    return std::string(buf.begin(), buf.end());
  };
  {
    Pt<Fp> acc = Pt<Fp>::infinity(c.A);
    for (unsigned long b = 0; mpz_cmp_ui(s.get_mpz_t(), b) > 0; ++b) {
      baby[key_of(acc)].push_back(b);
      acc = pt_add(c, acc, P);
    }
  }
  std::vector<mpz_class> hits;
  mpz_class a_max = width / s + 1;
  Pt<Fp> giant = R;
  for (mpz_class a = 0; a <= a_max; ++a) {
    auto it = baby.find(key_of(giant));
    if (it != baby.end()) {
      for (unsigned long b : it->second) {
        mpz_class j = a * s + b;
        if (j <= width && scalar_mul(c, lo + j, P).inf) hits.push_back(lo + j);
      }
    }
    giant = pt_sub(c, giant, sP);
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  return hits;
}

}  // namespace

mpz_class count_points_bsgs(const PrimeField& F, const CurveFp& c, Rng& rng) {
  // Intersect annihilator sets of random points until one candidate is left.
  std::vector<mpz_class> candidates;
  for (int tries = 0; tries < 64; ++tries) {
    Fp x = random_fp(F, rng);
    auto lifted = lift_x_base(c, x);
    if (!lifted.has_value()) continue;
    Pt<Fp> P = rng.u64() & 1 ? lifted->first : lifted->second;
    std::vector<mpz_class> ann = window_annihilators(F, c, P);
    if (ann.empty()) throw InternalError("no group order candidate in the Hasse window");
    if (candidates.empty()) {
      candidates = ann;
    } else {
      std::vector<mpz_class> merged;
      std::set_intersection(candidates.begin(), candidates.end(), ann.begin(), ann.end(),
                            std::back_inserter(merged));
      candidates = std::move(merged);
    }
    if (candidates.size() == 1) return candidates[0];
    if (candidates.empty()) throw InternalError("inconsistent point order candidates");
  }
  throw InternalError("group order not determined; too much torsion ambiguity");
}

std::vector<Pt<Fp>> three_torsion_rational(const PrimeField& F, const CurveFp& c) {
  // psi_3 = 3x^4 + 6Ax^2 + 12Bx - A^2
  UniPoly<Fp> psi({-(c.A * c.A), F.make_int(12) * c.B, F.make_int(6) * c.A, F.zero(),
                   F.make_int(3)});
  std::vector<Pt<Fp>> out{Pt<Fp>::infinity(c.A)};
  for (const Fp& x : roots_in_field(psi)) {
    auto lifted = lift_x_base(c, x);
    if (!lifted.has_value()) continue;
    out.push_back(lifted->first);
    if (lifted->second != lifted->first) out.push_back(lifted->second);
  }
  return out;
}

std::vector<PtExt> two_torsion_trace_zero(const CurveFp& c, const ExtField& K) {
  CurveExt cK = curve_to_ext(c, K);
  std::vector<PtExt> out{PtExt::infinity(K.zero())};
  UniPoly<Fp> cubic({c.B, c.A, c.A.zero_like(), c.A.one_like()});
  for (const ExtEl& x : roots_in_ext(cubic, K)) {
    PtExt P = PtExt::affine(x, K.zero());
    if (in_trace_zero(cK, P)) out.push_back(P);
  }
  return out;
}

std::vector<ExtEl> exceptional_set(const PrimeField& F, const CurveFp& c, const ExtField& K) {
  if (K.degree() != 5) throw InvalidInput("the exceptional set is defined for n = 5");
  CurveExt cK = curve_to_ext(c, K);
  std::vector<ExtEl> out;
  auto e3 = three_torsion_rational(F, c);
  auto e2 = two_torsion_trace_zero(c, K);
  for (const auto& Q : e3) {
    if (Q.inf) continue;
    for (const auto& R : e2) {
      PtExt S = pt_add(cK, pt_to_ext(Q, K), R);
      if (S.inf) continue;  // cannot happen: orders 3 and 2 are coprime
      out.push_back(S.x);
    }
  }
  std::sort(out.begin(), out.end(), [](const ExtEl& a, const ExtEl& b) { return a.cmp(b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > 16) throw InternalError("exceptional set larger than 16");
  return out;
}

std::vector<Pt<Fp>> enumerate_points(const PrimeField& F, const CurveFp& c) {
  if (F.modulus() > 100000) throw InvalidInput("exhaustive enumeration is limited to small fields");
  std::vector<Pt<Fp>> out{Pt<Fp>::infinity(c.A)};
  uint64_t q = F.modulus_word();
  for (uint64_t xv = 0; xv < q; ++xv) {
    auto lifted = lift_x_base(c, F.from_word(xv));
    if (!lifted.has_value()) continue;
    out.push_back(lifted->first);
    if (lifted->second != lifted->first) out.push_back(lifted->second);
  }
  return out;
}

std::vector<PtExt> enumerate_ext_points(const CurveFp& c, const ExtField& K) {
  const PrimeField& F = K.base();
  if (K.order() > 40 * 1000 * 1000)
    throw InvalidInput("exhaustive enumeration is limited to small extension fields");
  CurveExt cK = curve_to_ext(c, K);
  std::vector<PtExt> out{PtExt::infinity(K.zero())};
  const unsigned n = K.degree();
  uint64_t q = F.modulus_word();
  std::vector<Fp> coords(n, F.zero());
  std::vector<uint64_t> idx(n, 0);
  // odometer over F_q^n
  while (true) {
    ExtEl x = K.from_coords(coords);
    auto lifted = lift_x(cK, x);
    if (lifted.has_value()) {
      out.push_back(lifted->first);
      if (lifted->second != lifted->first) out.push_back(lifted->second);
    }
    unsigned pos = 0;
    while (pos < n) {
      if (++idx[pos] < q) {
        coords[pos] = F.from_word(idx[pos]);
        break;
      }
      idx[pos] = 0;
      coords[pos] = F.zero();
      ++pos;
    }
    if (pos == n) break;
  }
  return out;
}

}  // namespace tzc
