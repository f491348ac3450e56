#pragma once

#include <array>
#include <mutex>
#include <vector>

#include "tzc/fp.hpp"

namespace tzc {

class ExtEl;

// Kummer extension F_{q^n} = F_q[zeta]/(zeta^n - mu) with n | q - 1 and mu
// not an n-th power (so the binomial is irreducible). Frobenius acts
// diagonally on the power basis: zeta^q = mu^b zeta, b = (q-1)/n.
class ExtField {
 public:
  static constexpr unsigned kMaxDegree = 5;

  ExtField(const PrimeField& base, unsigned n, const Fp& mu);

  ExtField(const ExtField&) = delete;
  ExtField& operator=(const ExtField&) = delete;

  const PrimeField& base() const { return *F_; }
  unsigned degree() const { return n_; }
  const Fp& mu() const { return mu_; }
  const mpz_class& order() const { return Q_; }        // q^n
  const mpz_class& frob_exponent() const { return b_; }  // (q-1)/n

  // twist(i, j) = mu^(b * (i*j mod n)): coordinate j of x^(q^i) is twist(i,j) * x_j
  const Fp& twist(unsigned i, unsigned j) const { return twists_[i][j]; }

  ExtEl from_base(const Fp& a) const;
  ExtEl from_coords(const std::vector<Fp>& coords) const;
  ExtEl zero() const;
  ExtEl one() const;
  ExtEl zeta() const;

  // 2-Sylow generator of F_{q^n}^*, for square roots. Deterministic scan
  // zeta+0, zeta+1, ... for a non-square; lazily built.
  struct SylowData {
    unsigned v = 0;
    mpz_class m;
    std::array<Fp, kMaxDegree> eta_coords;
  };
  const SylowData& sqrt_sylow() const;

 private:
  const PrimeField* F_;
  unsigned n_;
  Fp mu_;
  mpz_class b_;
  mpz_class Q_;
  std::array<std::array<Fp, kMaxDegree>, kMaxDegree> twists_;

  mutable SylowData syl_;
  mutable std::once_flag syl_once_;
};

// Element of F_{q^n} as coordinates (x_0, ..., x_{n-1}) w.r.t. 1, zeta, ...,
// zeta^{n-1}, each in canonical form. Immutable value type.
class ExtEl {
 public:
  ExtEl() = default;

  const ExtField* field() const { return K_; }
  unsigned degree() const { return K_->degree(); }
  const Fp& coord(unsigned j) const { return c_[j]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;  // lies in the base field F_q
  Fp to_base() const;        // requires is_rational()

  ExtEl operator+(const ExtEl& o) const;
  ExtEl operator-(const ExtEl& o) const;
  ExtEl operator*(const ExtEl& o) const;
  ExtEl operator-() const;
  ExtEl inv() const;  // via conjugate product and a base-field inversion
  ExtEl operator/(const ExtEl& o) const { return *this * o.inv(); }

  ExtEl& operator+=(const ExtEl& o) { return *this = *this + o; }
  ExtEl& operator-=(const ExtEl& o) { return *this = *this - o; }
  ExtEl& operator*=(const ExtEl& o) { return *this = *this * o; }

  ExtEl square() const { return *this * *this; }
  ExtEl pow(const mpz_class& e) const;

  ExtEl scaled(const Fp& s) const;  // multiply by a base-field scalar

  // a^(q^i), computed coordinate-wise from the twist table. i is reduced mod n.
  ExtEl frobenius(unsigned i) const;

  bool operator==(const ExtEl& o) const;
  bool operator!=(const ExtEl& o) const { return !(*this == o); }

  // Lexicographic order on coordinate vectors (x_0 first).
  int cmp(const ExtEl& o) const;
  bool operator<(const ExtEl& o) const { return cmp(o) < 0; }

  ExtEl zero_like() const;
  ExtEl one_like() const;

  mpz_class field_order() const;

  std::string str() const;  // "[c0,c1,...]"
  void to_bytes(std::vector<unsigned char>& out) const;
  static ExtEl from_bytes(const ExtField& K, const unsigned char* p, size_t len);

 private:
  friend class ExtField;

  const ExtField* K_ = nullptr;
  std::array<Fp, ExtField::kMaxDegree> c_;

  void check_attached() const;
  void check_same(const ExtEl& o) const;
};

std::ostream& operator<<(std::ostream& os, const ExtEl& a);

// [a, a^q, ..., a^(q^(n-1))]
std::vector<ExtEl> norm_conjugates(const ExtEl& a);

// Square roots in F_{q^n} by Tonelli–Shanks on the extension. Returns
// {r, -r} with r lexicographically smaller, or nullopt.
std::optional<std::pair<ExtEl, ExtEl>> ext_sqrt(const ExtEl& a);

uint64_t hash_bytes_of(const ExtEl& a, uint64_t h);

ExtEl random_ext(const ExtField& K, Rng& rng);

}  // namespace tzc
