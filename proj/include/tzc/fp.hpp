#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tzc/error.hpp"
#include "tzc/rng.hpp"

namespace tzc {

class Fp;

// Prime field F_q, q an odd prime > 3. Owns the modulus and derived
// constants; elements keep a pointer back to their field, so a PrimeField
// must outlive its elements. Immutable after construction (the cached Sylow
// generators are built lazily under a once_flag), hence safe to share across
// threads.
//
// For q < 2^62 all arithmetic runs on single machine words; larger moduli
// go through GMP with no size limit.
class PrimeField {
 public:
  explicit PrimeField(mpz_class q);

  PrimeField(const PrimeField&) = delete;
  PrimeField& operator=(const PrimeField&) = delete;

  const mpz_class& modulus() const { return q_; }
  bool fits_word() const { return small_; }
  uint64_t modulus_word() const { return qw_; }
  size_t bit_length() const { return bits_; }
  size_t byte_length() const { return bytes_; }

  Fp make(const mpz_class& v) const;       // reduces mod q
  Fp make_int(long v) const;
  Fp from_word(uint64_t v) const;          // v must already be < q (small fields)
  Fp zero() const;
  Fp one() const;

  Fp parse(const std::string& decimal) const;

  // q-1 = r^v * m with r prime, r | q-1; eta generates the r-Sylow subgroup.
  // Built on first use, deterministically (gamma = 2, 3, 4, ...).
  struct SylowData {
    unsigned v = 0;
    mpz_class m;
    mpz_class eta;  // value of the generator
  };
  const SylowData& sylow(unsigned r) const;

  bool divides_order(unsigned r) const;  // r | q - 1

 private:
  mpz_class q_;
  bool small_;
  uint64_t qw_ = 0;
  size_t bits_, bytes_;

  mutable SylowData syl_[3];  // r = 2, 3, 5
  mutable std::once_flag syl_once_[3];

  static int sylow_index(unsigned r);
  void build_sylow(unsigned r) const;
};

// Element of F_q in canonical reduced form [0, q). Immutable value type.
class Fp {
 public:
  Fp() = default;  // detached placeholder; any arithmetic on it throws

  const PrimeField* field() const { return F_; }

  bool is_zero() const;
  bool is_one() const;

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator-() const;
  Fp inv() const;  // throws DivisionByZero on zero
  Fp operator/(const Fp& o) const { return *this * o.inv(); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp square() const { return *this * *this; }
  Fp pow(const mpz_class& e) const;  // e >= 0

  bool operator==(const Fp& o) const;
  bool operator!=(const Fp& o) const { return !(*this == o); }

  // Total order on canonical residues (numeric). Used for deterministic
  // output ordering and for picking canonical roots.
  int cmp(const Fp& o) const;
  bool operator<(const Fp& o) const { return cmp(o) < 0; }

  Fp zero_like() const;
  Fp one_like() const;

  mpz_class value() const;
  uint64_t word() const { return w_; }  // valid only on word-sized fields

  std::string str() const;                       // decimal
  void to_bytes(std::vector<unsigned char>& out) const;  // fixed-width big-endian, appended
  static Fp from_bytes(const PrimeField& F, const unsigned char* p, size_t len);

  mpz_class field_order() const;

 private:
  friend class PrimeField;

  const PrimeField* F_ = nullptr;
  uint64_t w_ = 0;                // value when the field fits a word
  std::optional<mpz_class> z_;    // engaged exactly on multi-word fields

  void check_same(const Fp& o) const;
  void check_attached() const;
};

std::ostream& operator<<(std::ostream& os, const Fp& a);

// Square roots. Returns the pair {r, -r} with r the numerically smaller
// residue, or nullopt for a non-residue. sqrt(0) = {0, 0}.
std::optional<std::pair<Fp, Fp>> sqrt(const Fp& a);

// All cube roots of a: three or none when q = 1 mod 3 (and a != 0), exactly
// one when q = 2 mod 3. Sorted ascending.
std::vector<Fp> cbrt_all(const Fp& a);

// All r-th roots for prime r in {2, 3, 5} with r | q - 1. Sorted ascending.
std::vector<Fp> rth_roots(const Fp& a, unsigned r);

// True iff a^((q-1)/n) = 1. Requires n | q - 1 and a != 0.
bool is_nth_power(const Fp& a, unsigned n);

// Smallest mu >= 2 that is not an n-th power in F_q (requires n | q - 1).
Fp smallest_non_nth_power(const PrimeField& F, unsigned n);

uint64_t hash_bytes_of(const Fp& a, uint64_t h);

Fp random_fp(const PrimeField& F, Rng& rng);

bool is_probable_prime(const mpz_class& n);

}  // namespace tzc
