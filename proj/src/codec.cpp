#include "tzc/codec.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

namespace tzc {

namespace {

class RootTimer {
 public:
  explicit RootTimer(DecompressStats* s) : s_(s) {
    if (s_) t0_ = std::chrono::steady_clock::now();
  }
  ~RootTimer() {
    if (s_)
      s_->root_seconds +=
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  DecompressStats* s_;
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace

std::vector<ExtEl> PointClass::x_coords() const {
  std::vector<ExtEl> out;
  for (const auto& P : members) out.push_back(P.x);
  std::sort(out.begin(), out.end(), [](const ExtEl& a, const ExtEl& b) { return a.cmp(b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TzParams TzParams::create(const mpz_class& q, unsigned n, const mpz_class& A,
                          const mpz_class& B, std::optional<mpz_class> mu,
                          std::optional<mpz_class> n1) {
  if (n != 3 && n != 5) throw InvalidInput("extension degree must be 3 or 5");
  TzParams P;
  P.F_ = std::make_unique<PrimeField>(q);
  const PrimeField& F = *P.F_;
  if (mpz_divisible_ui_p(mpz_class(q - 1).get_mpz_t(), n) == 0)
    throw InvalidInput("n must divide q - 1");
  P.n_ = n;
  P.mu_ = mu.has_value() ? F.make(*mu) : smallest_non_nth_power(F, n);
  P.K_ = std::make_unique<ExtField>(F, n, P.mu_);
  P.curve_ = CurveFp{F.make(A), F.make(B)};
  Fp disc = F.make_int(4) * P.curve_.A.pow(3) + F.make_int(27) * P.curve_.B.pow(2);
  if (disc.is_zero()) throw InvalidCurve("singular curve: 4A^3 + 27B^2 = 0");
  P.curve_ext_ = curve_to_ext(P.curve_, *P.K_);

  P.g_ = symmetrized_summation(n, P.curve_.A, P.curve_.B);
  unsigned dlast = P.g_.degree_in(n - 1);
  if (n == 3 && dlast != 1) throw InternalError("g_3 must be linear in the dropped coordinate");
  if (n == 5 && (dlast < 1 || dlast > 6))
    throw InternalError("g_5 degree in the dropped coordinate out of range");
  P.etilde_ = restricted_symmetric_functions(*P.K_);
  if (n == 5) P.L_ = exceptional_set(F, P.curve_, *P.K_);

  if (n1.has_value()) {
    mpz_class t = q + 1 - *n1;
    if (t * t > 4 * q) throw InvalidInput("supplied group order violates the Hasse bound");
    P.orders_ = group_orders_from_n1(q, n, *n1);
  } else if (q <= 1000000) {
    P.orders_ = group_orders_from_n1(q, n, count_points_exhaustive(F, P.curve_));
  }

  Consts& k = P.k_;
  k.c2 = F.make_int(2);
  k.c3 = F.make_int(3);
  k.c4 = F.make_int(4);
  k.c5 = F.make_int(5);
  k.c10 = F.make_int(10);
  k.c27 = F.make_int(27);
  k.c108 = F.make_int(108);
  k.c729 = F.make_int(729);
  k.mu = P.mu_;
  k.mu2 = P.mu_ * P.mu_;
  k.mu_cubed = k.mu2 * P.mu_;
  k.mu5sq = k.c5 * k.mu2;
  k.mu3 = k.c3 * P.mu_;
  k.mu5 = k.c5 * P.mu_;
  k.mu10 = k.c10 * P.mu_;
  k.mu12 = F.make_int(12) * P.mu_;
  k.mu15 = F.make_int(15) * P.mu_;
  k.mu18 = F.make_int(18) * P.mu_;
  k.mu2_9 = F.make_int(9) * k.mu2;
  k.A2 = P.curve_.A * P.curve_.A;
  k.twoA = k.c2 * P.curve_.A;
  k.A6 = F.make_int(6) * P.curve_.A;
  k.Amu6 = k.A6 * P.mu_;
  k.B4 = k.c4 * P.curve_.B;
  k.B12 = F.make_int(12) * P.curve_.B;
  k.inv3 = k.c3.inv();
  k.inv54mu = (F.make_int(54) * P.mu_).inv();
  return P;
}

void t_values_into(const TzParams& P, const ExtEl& X, Fp* out) {
  const auto& k = P.k();
  if (P.n() == 3) {
    // t1 = x0, t2 = x1 x2: 1M
    out[0] = X.coord(0);
    out[1] = X.coord(1) * X.coord(2);
    return;
  }
  const Fp &x0 = X.coord(0), &x1 = X.coord(1), &x2 = X.coord(2), &x3 = X.coord(3),
           &x4 = X.coord(4);
  Fp p14 = x1 * x4, p23 = x2 * x3;
  Fp sq1 = x1.square(), sq2 = x2.square(), sq3 = x3.square(), sq4 = x4.square();
  Fp x1cu = sq1 * x1, x2cu = sq2 * x2, x3cu = sq3 * x3, x4cu = sq4 * x4;
  out[0] = x0;
  out[1] = p14 + p23;
  out[2] = sq1 * x3 + x1 * sq2 + k.mu * (sq3 * x4 + x2 * sq4);
  out[3] = k.mu * (sq2 * sq3 + sq1 * sq4 - x1 * x3cu - x2cu * x4 - p14 * p23) - x1cu * x2 -
           k.mu2 * (x3 * x4cu);
}

std::vector<Fp> t_values(const TzParams& P, const ExtEl& X) {
  std::vector<Fp> out(P.n() - 1);
  t_values_into(P, X, out.data());
  return out;
}

namespace {

// first four relations of the t-to-s change of coordinates
void s_from_t5_into(const TzParams::Consts& k, const Fp* t, Fp* out) {
  Fp t1sq = t[0].square();
  Fp t1cu = t1sq * t[0];
  Fp t1q = t1sq.square();
  Fp t1t2 = t[0] * t[1];
  out[0] = k.c5 * t[0];
  out[1] = k.c10 * t1sq - k.mu5 * t[1];
  out[2] = k.c10 * t1cu - k.mu15 * t1t2 + k.mu5 * t[2];
  out[3] = k.c5 * t1q - k.mu15 * (t1sq * t[1]) + k.mu10 * (t[0] * t[2]) + k.mu5 * t[3];
}

std::vector<Fp> s_from_t5(const TzParams::Consts& k, const std::vector<Fp>& t) {
  std::vector<Fp> out(4);
  s_from_t5_into(k, t.data(), out.data());
  return out;
}

}  // namespace

void s_values_into(const TzParams& P, const ExtEl& X, Fp* out) {
  const auto& k = P.k();
  if (P.n() == 3) {
    // (s1, s2) = (3 x0, 3 x0^2 - 3 mu x1 x2): 1S + 1M
    const Fp& x0 = X.coord(0);
    Fp sq = x0.square();
    out[0] = x0 + x0 + x0;
    out[1] = sq + sq + sq - k.mu3 * (X.coord(1) * X.coord(2));
    return;
  }
  Fp t[4];
  t_values_into(P, X, t);
  s_from_t5_into(k, t, out);
}

std::vector<Fp> s_values(const TzParams& P, const ExtEl& X) {
  std::vector<Fp> out(P.n() - 1);
  s_values_into(P, X, out.data());
  return out;
}

std::vector<Fp> s_values_full(const TzParams& P, const ExtEl& X) {
  const auto& k = P.k();
  if (P.n() == 3) {
    const Fp &x0 = X.coord(0), &x1 = X.coord(1), &x2 = X.coord(2);
    auto s = s_values(P, X);
    // s3 = x0^3 - 3 mu x0 x1 x2 + mu x1^3 + mu^2 x2^3
    Fp s3 = x0.pow(3) - k.mu3 * (x0 * x1 * x2) + k.mu * x1.pow(3) + k.mu2 * x2.pow(3);
    return {s[0], s[1], s3};
  }
  const Fp &x1 = X.coord(1), &x2 = X.coord(2), &x3 = X.coord(3), &x4 = X.coord(4);
  auto t = t_values(P, X);
  Fp sq1 = x1.square(), sq2 = x2.square(), sq3 = x3.square(), sq4 = x4.square();
  // t5 = x1^5 + mu x2^5 + mu^2 x3^5 + mu^3 x4^5
  //      + 5 mu (x1^2 x2 x3^2 + x1^2 x2^2 x4 - x1^3 x3 x4 - x1 x2^3 x3)
  //      + 5 mu^2 (x2^2 x3 x4^2 + x1 x3^2 x4^2 - x2 x3^3 x4 - x1 x2 x4^3)
  Fp t5 = x1 * sq1.square() + k.mu * (x2 * sq2.square()) + k.mu2 * (x3 * sq3.square()) +
          k.mu_cubed * (x4 * sq4.square()) +
          k.mu5 * (sq1 * x2 * sq3 + sq1 * sq2 * x4 - sq1 * x1 * x3 * x4 - x1 * sq2 * x2 * x3) +
          k.mu5sq * (sq2 * x3 * sq4 + x1 * sq3 * sq4 - x2 * sq3 * x3 * x4 - x1 * x2 * sq4 * x4);
  auto s = s_from_t5(k, t);
  // s5 = t1^5 - 5 mu t1^3 t2 + 5 mu t1^2 t3 + 5 mu t1 t4 + mu t5
  Fp t1sq = t[0].square();
  Fp s5 = t[0] * t1sq.square() - k.mu5 * (t1sq * t[0] * t[1]) + k.mu5 * (t1sq * t[2]) +
          k.mu5 * (t[0] * t[3]) + k.mu * t5;
  return {s[0], s[1], s[2], s[3], s5};
}

Fp summation_at_conjugates(const TzParams& P, const ExtEl& X) {
  return P.g().eval(s_values_full(P, X));
}

Compressed compress(const TzParams& P, const PtExt& pt, Variant v, bool check_membership) {
  if (pt.inf) throw CannotCompressIdentity();
  if (check_membership) {
    require_on_curve(P.curve_ext(), pt);
    if (!in_trace_zero(P.curve_ext(), pt)) throw NotTraceZero();
  }
  Compressed c;
  c.variant = v;
  c.n = P.n();
  c.coords = v == Variant::S ? s_values(P, pt.x) : t_values(P, pt.x);
  return c;
}

PointClass class_of(const TzParams& P, const PtExt& pt) {
  PointClass cls;
  if (pt.inf) {
    cls.members.push_back(pt);
    return cls;
  }
  for (unsigned i = 0; i < P.n(); ++i) {
    PtExt c = frobenius_point(pt, i);
    cls.members.push_back(c);
    cls.members.push_back(pt_neg(c));
  }
  std::sort(cls.members.begin(), cls.members.end(),
            [](const PtExt& a, const PtExt& b) { return a.cmp(b) < 0; });
  cls.members.erase(std::unique(cls.members.begin(), cls.members.end()), cls.members.end());
  return cls;
}

bool classes_equal(const TzParams& P, const PtExt& a, const PtExt& b) {
  if (a.inf || b.inf) return a.inf == b.inf;
  for (unsigned i = 0; i < P.n(); ++i) {
    PtExt c = frobenius_point(a, i);
    if (c == b || pt_neg(c) == b) return true;
  }
  return false;
}

namespace {

// Filtering tail of decompression: reject exceptional x, wrong conjugate
// image, irrational y, and non-members; group survivors into classes.
std::vector<PointClass> assemble_classes(const TzParams& P, const std::vector<ExtEl>& xs,
                                         const std::vector<Fp>& s_target,
                                         DecompressStats* stats) {
  std::vector<PointClass> out;
  for (const ExtEl& X : xs) {
    if (stats) stats->candidates++;
    if (P.n() == 5) {
      const auto& L = P.exceptional();
      auto it = std::lower_bound(L.begin(), L.end(), X,
                                 [](const ExtEl& a, const ExtEl& b) { return a.cmp(b) < 0; });
      if (it != L.end() && *it == X) {
        if (stats) stats->exceptional_rejects++;
        continue;
      }
    }
    // the conjugate multiset of this candidate must reproduce the input;
    // guards against roots living in a proper subfield
    std::vector<Fp> img = s_values(P, X);
    if (!std::equal(img.begin(), img.end(), s_target.begin(), s_target.end())) {
      if (stats) stats->image_mismatch++;
      continue;
    }
    std::optional<std::pair<PtExt, PtExt>> lifted;
    {
      RootTimer rt(stats);
      lifted = lift_x(P.curve_ext(), X);
    }
    if (!lifted.has_value()) {
      if (stats) stats->irrational_y++;
      continue;
    }
    PtExt pt = lifted->first;
    if (!in_trace_zero(P.curve_ext(), pt)) {
      if (stats) stats->trace_rejects++;
      continue;
    }
    PointClass cls = class_of(P, pt);
    bool seen = false;
    for (const auto& c : out) seen = seen || c.same_class(cls);
    if (!seen) out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const PointClass& a, const PointClass& b) {
    return a.canonical().cmp(b.canonical()) < 0;
  });
  return out;
}

void dedupe_ext(std::vector<ExtEl>& xs) {
  std::sort(xs.begin(), xs.end(), [](const ExtEl& a, const ExtEl& b) { return a.cmp(b) < 0; });
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

std::vector<PointClass> decompress(const TzParams& P, const Compressed& c,
                                   DecompressStats* stats) {
  auto t_start = std::chrono::steady_clock::now();
  auto account = [&] {
    if (stats)
      stats->total_seconds +=
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  };
  const PrimeField& F = P.F();
  const ExtField& K = P.K();
  const auto& k = P.k();
  const unsigned n = P.n();
  if (c.n != n) throw InvalidInput("compressed point has the wrong extension degree");
  if (c.coords.size() != n - 1) throw InvalidInput("compressed point has the wrong length");
  std::vector<Fp> in;
  for (const Fp& v : c.coords) in.push_back(F.make(v.value()));

  std::vector<ExtEl> xs;
  std::vector<Fp> s_target;

  if (n == 3) {
    Fp s1, s2, s3;
    if (c.variant == Variant::S) {
      s1 = in[0];
      s2 = in[1];
      if (s1.is_zero()) {
        if ((s2 - P.curve().A).is_zero())
          throw DegenerateInput("every value of the dropped coordinate solves the equation");
        account();
        return {};
      }
      // s3 = (s2 (s2 - 2A) - 4B s1 + A^2) / (4 s1): 1M + 1D
      s3 = (s2 * (s2 - k.twoA) - k.B4 * s1 + k.A2) * (k.c4 * s1).inv();
    } else {
      const Fp &t1 = in[0], &t2 = in[1];
      if (t1.is_zero()) {
        if ((k.mu3 * t2 + P.curve().A).is_zero())
          throw DegenerateInput("every value of the dropped coordinate solves the equation");
        account();
        return {};
      }
      // t3 = (-3 t1^4 + (18 mu t1^2 + 9 mu^2 t2 + 6 A mu) t2
      //       - 12 B t1 - 6 A t1^2 + A^2) / (12 mu t1)
      Fp t1sq = t1.square();
      Fp t1q = t1sq.square();
      Fp t3 = (-(k.c3 * t1q) + (k.mu18 * t1sq + k.mu2_9 * t2 + k.Amu6) * t2 - k.B12 * t1 -
               k.A6 * t1sq + k.A2) *
              (k.mu12 * t1).inv();
      s1 = k.c3 * t1;
      s2 = k.c3 * t1sq - k.mu3 * t2;
      s3 = t1sq * t1 - k.mu3 * (t1 * t2) + k.mu * t3;
    }
    s_target = {s1, s2};

    // recover x: x0 is free; x1 from the quadratic in x1^3, then x2 by one
    // division. When 3 x0^2 = s2 the candidate x1 may be zero, which the
    // direct path cannot represent; fall back to factoring the cubic.
    Fp x0 = s1 * k.inv3;
    Fp x0sq = x0.square();
    Fp C = k.c3 * x0sq - s2;  // equals 3 mu x1 x2 on solutions
    if (C.is_zero()) {
      UniPoly<Fp> cubic({-s3, s2, -s1, F.one()});
      RootTimer rt(stats);
      xs = roots_in_ext(cubic, K);
    } else {
      // 27 mu^4 x1^6 + 27 mu^3 (x0 (s2 - 2 x0^2) - s3) x1^3 + mu^2 (3 x0^2 - s2)^3
      Fp K1 = x0 * (s2 - k.c2 * x0sq) - s3;
      Fp disc = k.c729 * K1.square() - k.c108 * C.pow(3);
      std::optional<std::pair<Fp, Fp>> r;
      {
        RootTimer rt(stats);
        r = sqrt(disc);
      }
      if (r.has_value()) {
        Fp u1 = (r->first - k.c27 * K1) * k.inv54mu;
        Fp u2 = (-r->first - k.c27 * K1) * k.inv54mu;
        std::vector<Fp> us{u1};
        if (!(u2 == u1)) us.push_back(u2);
        for (const Fp& u : us) {
          if (u.is_zero()) continue;
          std::vector<Fp> cuberoots;
          {
            RootTimer rt(stats);
            cuberoots = cbrt_all(u);
          }
          for (const Fp& x1 : cuberoots) {
            Fp x2 = C * (k.mu3 * x1).inv();
            xs.push_back(K.from_coords({x0, x1, x2}));
          }
        }
      }
    }
    dedupe_ext(xs);
  } else {
    std::vector<Fp> s = c.variant == Variant::S ? in : s_from_t5(k, in);
    s_target = s;
    UniPoly<Fp> gt = P.g().partial_eval_last(s);
    if (gt.is_zero())
      throw DegenerateInput("every value of the dropped coordinate solves the equation");
    std::vector<Fp> taus;
    if (gt.deg() >= 1) {
      RootTimer rt(stats);
      taus = roots_in_field(gt);
    }
    for (const Fp& tau : taus) {
      UniPoly<Fp> quintic({-tau, s[3], -s[2], s[1], -s[0], F.one()});
      std::vector<ExtEl> roots;
      {
        RootTimer rt(stats);
        roots = roots_in_ext(quintic, K);
      }
      xs.insert(xs.end(), roots.begin(), roots.end());
    }
    dedupe_ext(xs);
  }

  auto out = assemble_classes(P, xs, s_target, stats);
  account();
  return out;
}

PtExt random_curve_point(const TzParams& P, Rng& rng) {
  while (true) {
    auto lifted = lift_x(P.curve_ext(), random_ext(P.K(), rng));
    if (!lifted.has_value()) continue;
    return rng.u64() & 1 ? lifted->first : lifted->second;
  }
}

PtExt random_trace_zero_point(const TzParams& P, Rng& rng) {
  // With |E(F_q)| known and coprime to n, P - (1/n mod |E(F_q)|) Tr(P) is
  // exactly uniform on T_n: the correction term is a trace preimage of
  // Tr(P), so the fibers are the cosets of E(F_q)'s image. Without orders,
  // fall back to the projector n P - Tr(P), which always lands in T_n but
  // only reaches the subgroup n T_n.
  mpz_class cof;
  bool uniform = P.orders().has_value() &&
                 mpz_invert(cof.get_mpz_t(), mpz_class(P.n()).get_mpz_t(),
                            P.orders()->n1.get_mpz_t()) != 0;
  while (true) {
    PtExt R = random_curve_point(P, rng);
    PtExt tr = trace(P.curve_ext(), R);
    PtExt out = uniform ? pt_sub(P.curve_ext(), R, scalar_mul(P.curve_ext(), cof, tr))
                        : pt_sub(P.curve_ext(), scalar_mul(P.curve_ext(), P.n(), R), tr);
    if (!out.inf) return out;
  }
}

TraceZeroEnumeration enumerate_trace_zero(const TzParams& P, Rng& rng) {
  const ExtField& K = P.K();
  const PrimeField& F = P.F();
  if (!P.orders().has_value())
    throw InvalidInput("trace zero enumeration needs the group orders");
  if (!F.fits_word() || K.order() >= (mpz_class(1) << 56))
    throw InvalidInput("trace zero enumeration is limited to desk-scale fields");
  const GroupOrders& o = *P.orders();
  if (o.tn >= (mpz_class(1) << 32))
    throw InvalidInput("trace zero subgroup too large to enumerate");
  const uint64_t target = mpz_get_ui(o.tn.get_mpz_t());
  const unsigned n = K.degree();
  const uint64_t q = F.modulus_word();
  const CurveExt& cv = P.curve_ext();

  auto key_of = [&](const PtExt& pt) -> uint64_t {
    if (pt.inf) return ~0ull;
    uint64_t xk = 0;
    for (unsigned j = n; j-- > 0;) xk = xk * q + pt.x.coord(j).word();
    return xk * 2 + (pt.y.cmp(-pt.y) > 0 ? 1 : 0);
  };

  std::unordered_set<uint64_t> seen;
  seen.reserve(static_cast<size_t>(target) + target / 2 + 8);
  std::vector<PtExt> reps;

  auto process = [&](const PtExt& pt) {
    seen.insert(key_of(pt));
    if (pt.inf) return;
    uint64_t self = key_of(pt);
    uint64_t best = self;
    for (unsigned i = 0; i < n; ++i) {
      PtExt c = frobenius_point(pt, i);
      best = std::min(best, key_of(c));
      best = std::min(best, key_of(pt_neg(c)));
    }
    if (best == self) reps.push_back(pt);
  };

  std::vector<PtExt> gens;
  std::vector<uint64_t> gen_orders;  // order in the quotient by earlier generators

  // walk { sum_i c_i g_i : 0 <= c_i < order_i } by nested additions
  auto walk = [&] {
    seen.clear();
    reps.clear();
    auto rec = [&](auto&& self, size_t level, const PtExt& base) -> void {
      if (level == gens.size()) {
        process(base);
        return;
      }
      PtExt cur = base;
      for (uint64_t j = 0; j < gen_orders[level]; ++j) {
        self(self, level + 1, cur);
        cur = pt_add(cv, cur, gens[level]);
      }
    };
    rec(rec, 0, PtExt::infinity(K.zero()));
  };

  // generator candidates by rejection sampling: uniform over all of T_n
  // regardless of its group structure (feasible at desk scale, one hit per
  // |E(F_q)| curve points on average)
  auto fresh_member = [&]() -> PtExt {
    for (int tries = 0; tries < 4000000; ++tries) {
      PtExt R = random_curve_point(P, rng);
      if (!in_trace_zero(cv, R)) continue;
      if (!R.inf && !seen.count(key_of(R))) return R;
    }
    throw InternalError("could not sample a fresh trace zero point");
  };

  walk();  // just the identity
  uint64_t size = 1;
  for (int rounds = 0; rounds < 64 && size < target; ++rounds) {
    PtExt h = fresh_member();
    uint64_t jstar = 1;
    PtExt cur = h;
    while (!seen.count(key_of(cur))) {
      cur = pt_add(cv, cur, h);
      if (++jstar > target) throw InternalError("quotient order walk overran the group");
    }
    gens.push_back(h);
    gen_orders.push_back(jstar);
    size *= jstar;
    walk();
    if (seen.size() != size) throw InternalError("subgroup walk produced duplicates");
  }
  if (size != target) throw InternalError("trace zero enumeration incomplete");

  TraceZeroEnumeration out;
  out.order = o.tn;
  out.point_count = size;
  std::sort(reps.begin(), reps.end(), [](const PtExt& a, const PtExt& b) { return a.cmp(b) < 0; });
  out.class_reps = std::move(reps);
  return out;
}

}  // namespace tzc
