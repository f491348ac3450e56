#pragma once

#include <memory>
#include <optional>

#include "tzc/ec.hpp"
#include "tzc/semaev.hpp"

namespace tzc {

enum class Variant : uint8_t { S = 0, T = 1 };

// (n-1) base-field coordinates plus the variant tag.
struct Compressed {
  Variant variant = Variant::S;
  unsigned n = 3;
  std::vector<Fp> coords;
};

// The orbit {+-phi^i(P)} of at most 2n points identified by a compressed
// vector. Members sorted, canonical representative first.
struct PointClass {
  std::vector<PtExt> members;

  const PtExt& canonical() const { return members.front(); }
  bool same_class(const PointClass& o) const { return canonical() == o.canonical(); }

  // every distinct x-coordinate in the orbit, sorted
  std::vector<ExtEl> x_coords() const;
};

struct DecompressStats {
  double total_seconds = 0;
  double root_seconds = 0;  // poly root finding, sqrt/cbrt, y recovery
  uint64_t candidates = 0;
  uint64_t exceptional_rejects = 0;
  uint64_t irrational_y = 0;
  uint64_t image_mismatch = 0;
  uint64_t trace_rejects = 0;
};

// Full parameter set for one trace zero subgroup: fields, curve, the cached
// symmetrized summation polynomial and (n = 5) the exceptional x-coordinate
// set. Built once, immutable afterwards, safe to share across threads.
class TzParams {
 public:
  static TzParams create(const mpz_class& q, unsigned n, const mpz_class& A,
                         const mpz_class& B, std::optional<mpz_class> mu = std::nullopt,
                         std::optional<mpz_class> n1 = std::nullopt);

  const PrimeField& F() const { return *F_; }
  const ExtField& K() const { return *K_; }
  unsigned n() const { return n_; }
  const Fp& mu() const { return mu_; }
  const CurveFp& curve() const { return curve_; }
  const CurveExt& curve_ext() const { return curve_ext_; }
  const MultiPoly& g() const { return g_; }
  const std::vector<MultiPoly>& etilde() const { return etilde_; }
  const std::vector<ExtEl>& exceptional() const { return L_; }
  const std::optional<GroupOrders>& orders() const { return orders_; }

  // small field constants used by the straight-line compression and
  // decompression programs
  struct Consts {
    Fp c2, c3, c4, c5, c10, c27, c108, c729;
    Fp mu, mu2, mu_cubed, mu3, mu5, mu5sq, mu10, mu12, mu15, mu18, mu2_9;
    Fp A2, twoA, A6, Amu6, B4, B12;
    Fp inv3, inv54mu;
  };
  const Consts& k() const { return k_; }

  TzParams(TzParams&&) = default;
  TzParams& operator=(TzParams&&) = default;

 private:
  TzParams() = default;

  Consts k_;

  std::unique_ptr<PrimeField> F_;
  std::unique_ptr<ExtField> K_;
  unsigned n_ = 0;
  Fp mu_;
  CurveFp curve_;
  CurveExt curve_ext_;
  MultiPoly g_;
  std::vector<MultiPoly> etilde_;
  std::vector<ExtEl> L_;
  std::optional<GroupOrders> orders_;
};

// S_i = e~_i(X_0, ..., X_{n-1}) for i = 1..n-1, straight-line evaluation.
// The *_into forms write n-1 entries into a caller buffer (no allocation;
// these are the timed kernels).
void s_values_into(const TzParams& P, const ExtEl& X, Fp* out);
void t_values_into(const TzParams& P, const ExtEl& X, Fp* out);
std::vector<Fp> s_values(const TzParams& P, const ExtEl& X);
std::vector<Fp> t_values(const TzParams& P, const ExtEl& X);

// All n symmetric functions of the conjugates, straight-line.
std::vector<Fp> s_values_full(const TzParams& P, const ExtEl& X);

// f_n evaluated at the conjugate tuple of X, computed as g_n(s_1, ..., s_n);
// the fast membership side of the solution-set equation.
Fp summation_at_conjugates(const TzParams& P, const ExtEl& X);

// Errors: CannotCompressIdentity, NotOnCurve, NotTraceZero (when checking).
Compressed compress(const TzParams& P, const PtExt& pt, Variant v,
                    bool check_membership = true);

// All trace-zero point classes whose compression equals c, sorted by
// canonical representative. Throws DegenerateInput when the symmetrized
// equation vanishes identically in the dropped coordinate.
std::vector<PointClass> decompress(const TzParams& P, const Compressed& c,
                                   DecompressStats* stats = nullptr);

PointClass class_of(const TzParams& P, const PtExt& pt);
bool classes_equal(const TzParams& P, const PtExt& a, const PtExt& b);

// Uniform-ish random point of T_n via the projector P -> n P - Tr(P).
PtExt random_trace_zero_point(const TzParams& P, Rng& rng);

PtExt random_curve_point(const TzParams& P, Rng& rng);

// Exhaustive trace zero enumeration for desk-scale parameters (q^n below
// 2^62). Generates the subgroup from random projector samples; returns one
// canonical representative per {+-phi^i} class plus the total point count.
struct TraceZeroEnumeration {
  mpz_class order;               // |T_n| from the trace recurrence
  size_t point_count = 0;        // points actually enumerated
  std::vector<PtExt> class_reps;
};
TraceZeroEnumeration enumerate_trace_zero(const TzParams& P, Rng& rng);

}  // namespace tzc
