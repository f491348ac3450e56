#include "tzc/fp.hpp"

#include <algorithm>
#include <ostream>

namespace tzc {

namespace {

uint64_t mulmod_w(uint64_t a, uint64_t b, uint64_t q) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

uint64_t powmod_w(uint64_t base, const mpz_class& e, uint64_t q) {
  uint64_t acc = 1 % q;
  size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return acc;
  for (size_t i = nbits; i-- > 0;) {
    acc = mulmod_w(acc, acc, q);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mulmod_w(acc, base, q);
  }
  return acc;
}

// Extended Euclid on words; q prime, 0 < a < q.
uint64_t invmod_w(uint64_t a, uint64_t q) {
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(q), new_r = static_cast<int64_t>(a);
  while (new_r != 0) {
    int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += static_cast<int64_t>(q);
  return static_cast<uint64_t>(t);
}

}  // namespace

PrimeField::PrimeField(mpz_class q) : q_(std::move(q)) {
  if (q_ <= 3) throw InvalidInput("modulus must be an odd prime > 3");
  if (!is_probable_prime(q_)) throw InvalidInput("modulus is not prime: " + q_.get_str());
  bits_ = mpz_sizeinbase(q_.get_mpz_t(), 2);
  bytes_ = (bits_ + 7) / 8;
  small_ = bits_ <= 62;
  if (small_) qw_ = mpz_get_ui(q_.get_mpz_t());
}

int PrimeField::sylow_index(unsigned r) {
  switch (r) {
    case 2: return 0;
    case 3: return 1;
    case 5: return 2;
    default: throw InvalidInput("unsupported root degree " + std::to_string(r));
  }
}

bool PrimeField::divides_order(unsigned r) const {
  return mpz_divisible_ui_p(mpz_class(q_ - 1).get_mpz_t(), r) != 0;
}

void PrimeField::build_sylow(unsigned r) const {
  SylowData d;
  d.m = q_ - 1;
  while (mpz_divisible_ui_p(d.m.get_mpz_t(), r)) {
    d.m /= r;
    d.v++;
  }
  if (d.v == 0) throw InvalidInput("field has no " + std::to_string(r) + "-Sylow subgroup");
  // eta = gamma^m of exact order r^v, i.e. eta^(r^(v-1)) != 1.
  mpz_class rv1 = 1;
  for (unsigned i = 0; i + 1 < d.v; ++i) rv1 *= r;
  for (mpz_class gamma = 2;; ++gamma) {
    mpz_class eta;
    mpz_powm(eta.get_mpz_t(), gamma.get_mpz_t(), d.m.get_mpz_t(), q_.get_mpz_t());
    mpz_class probe;
    mpz_powm(probe.get_mpz_t(), eta.get_mpz_t(), rv1.get_mpz_t(), q_.get_mpz_t());
    // probe must have order exactly r: probe != 1 (and probe^r = 1 automatically)
    if (probe != 1) {
      d.eta = eta;
      break;
    }
  }
  syl_[sylow_index(r)] = d;
}

const PrimeField::SylowData& PrimeField::sylow(unsigned r) const {
  int idx = sylow_index(r);
  std::call_once(syl_once_[idx], [this, r] { build_sylow(r); });
  return syl_[idx];
}

Fp PrimeField::make(const mpz_class& v) const {
  Fp e;
  e.F_ = this;
  mpz_class red;
  mpz_mod(red.get_mpz_t(), v.get_mpz_t(), q_.get_mpz_t());
  if (small_)
    e.w_ = mpz_get_ui(red.get_mpz_t());
  else
    e.z_ = std::move(red);
  return e;
}

Fp PrimeField::make_int(long v) const { return make(mpz_class(v)); }

Fp PrimeField::from_word(uint64_t v) const {
  if (!small_) return make(mpz_class(static_cast<unsigned long>(v)));
  Fp e;
  e.F_ = this;
  e.w_ = v % qw_;
  return e;
}

Fp PrimeField::zero() const { return from_word(0); }

Fp PrimeField::one() const {
  if (small_) return from_word(1);
  return make(1);
}

Fp PrimeField::parse(const std::string& decimal) const {
  mpz_class v;
  if (v.set_str(decimal, 10) != 0) throw InvalidInput("not a decimal integer: " + decimal);
  return make(v);
}

void Fp::check_attached() const {
  if (!F_) throw InternalError("use of detached field element");
}

void Fp::check_same(const Fp& o) const {
  check_attached();
  o.check_attached();
  if (F_ == o.F_) return;
  if (F_->modulus() != o.F_->modulus()) throw MismatchedField();
}

bool Fp::is_zero() const {
  check_attached();
  return F_->fits_word() ? w_ == 0 : *z_ == 0;
}

bool Fp::is_one() const {
  check_attached();
  return F_->fits_word() ? w_ == 1 : *z_ == 1;
}

Fp Fp::operator+(const Fp& o) const {
  check_same(o);
  Fp r;
  r.F_ = F_;
  if (F_->fits_word()) {
    uint64_t s = w_ + o.w_;
    if (s >= F_->modulus_word()) s -= F_->modulus_word();
    r.w_ = s;
  } else {
    mpz_class s = *z_ + *o.z_;
    if (s >= F_->modulus()) s -= F_->modulus();
    r.z_ = std::move(s);
  }
  return r;
}

Fp Fp::operator-(const Fp& o) const {
  check_same(o);
  Fp r;
  r.F_ = F_;
  if (F_->fits_word()) {
    r.w_ = w_ >= o.w_ ? w_ - o.w_ : w_ + F_->modulus_word() - o.w_;
  } else {
    mpz_class s = *z_ - *o.z_;
    if (s < 0) s += F_->modulus();
    r.z_ = std::move(s);
  }
  return r;
}

Fp Fp::operator*(const Fp& o) const {
  check_same(o);
  Fp r;
  r.F_ = F_;
  if (F_->fits_word()) {
    r.w_ = mulmod_w(w_, o.w_, F_->modulus_word());
  } else {
    mpz_class s = *z_ * *o.z_;
    mpz_mod(s.get_mpz_t(), s.get_mpz_t(), F_->modulus().get_mpz_t());
    r.z_ = std::move(s);
  }
  return r;
}

Fp Fp::operator-() const {
  check_attached();
  Fp r;
  r.F_ = F_;
  if (F_->fits_word()) {
    r.w_ = w_ == 0 ? 0 : F_->modulus_word() - w_;
  } else {
    r.z_ = *z_ == 0 ? mpz_class(0) : mpz_class(F_->modulus() - *z_);
  }
  return r;
}

Fp Fp::inv() const {
  check_attached();
  if (is_zero()) throw DivisionByZero();
  Fp r;
  r.F_ = F_;
  if (F_->fits_word()) {
    r.w_ = invmod_w(w_, F_->modulus_word());
  } else {
    mpz_class s;
    if (mpz_invert(s.get_mpz_t(), z_->get_mpz_t(), F_->modulus().get_mpz_t()) == 0)
      throw DivisionByZero();
    r.z_ = std::move(s);
  }
  return r;
}

Fp Fp::pow(const mpz_class& e) const {
  check_attached();
  Fp r;
  r.F_ = F_;
  if (F_->fits_word()) {
    r.w_ = powmod_w(w_, e, F_->modulus_word());
  } else {
    mpz_class s;
    mpz_powm(s.get_mpz_t(), z_->get_mpz_t(), e.get_mpz_t(), F_->modulus().get_mpz_t());
    r.z_ = std::move(s);
  }
  return r;
}

bool Fp::operator==(const Fp& o) const {
  if (!F_ || !o.F_) return F_ == o.F_;
  if (F_ != o.F_ && F_->modulus() != o.F_->modulus()) return false;
  return F_->fits_word() ? w_ == o.w_ : *z_ == *o.z_;
}

int Fp::cmp(const Fp& o) const {
  check_same(o);
  if (F_->fits_word()) return w_ < o.w_ ? -1 : (w_ == o.w_ ? 0 : 1);
  return ::mpz_cmp(z_->get_mpz_t(), o.z_->get_mpz_t());
}

Fp Fp::zero_like() const {
  check_attached();
  return F_->zero();
}

Fp Fp::one_like() const {
  check_attached();
  return F_->one();
}

mpz_class Fp::value() const {
  check_attached();
  if (F_->fits_word()) return mpz_class(static_cast<unsigned long>(w_));
  return *z_;
}

std::string Fp::str() const { return value().get_str(); }

void Fp::to_bytes(std::vector<unsigned char>& out) const {
  check_attached();
  size_t width = F_->byte_length();
  size_t start = out.size();
  out.resize(start + width, 0);
  mpz_class v = value();
  size_t count = 0;
  // big-endian, right-aligned
  std::vector<unsigned char> tmp((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8);
  if (v != 0) {
    mpz_export(tmp.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
    std::copy(tmp.begin(), tmp.begin() + count, out.begin() + start + (width - count));
  }
}

Fp Fp::from_bytes(const PrimeField& F, const unsigned char* p, size_t len) {
  mpz_class v;
  mpz_import(v.get_mpz_t(), len, 1, 1, 1, 0, p);
  if (v >= F.modulus()) throw InvalidInput("encoded field element exceeds the modulus");
  return F.make(v);
}

mpz_class Fp::field_order() const {
  check_attached();
  return F_->modulus();
}

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.str(); }

uint64_t hash_bytes_of(const Fp& a, uint64_t h) {
  std::vector<unsigned char> buf;
  a.to_bytes(buf);
  return fnv1a(buf.data(), buf.size(), h);
}

Fp random_fp(const PrimeField& F, Rng& rng) { return F.make(rng.mpz_below(F.modulus())); }

bool is_probable_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Adleman–Manders–Miller r-th root extraction in F_q, r prime with r | q-1.
// Returns every root (0, 1 or r of them), sorted.
static std::vector<Fp> amm_roots(const Fp& a, unsigned r) {
  const PrimeField& F = *a.field();
  std::vector<Fp> out;
  if (a.is_zero()) {
    out.push_back(F.zero());
    return out;
  }
  const auto& syl = F.sylow(r);
  Fp eta = F.make(syl.eta);

  // b = a^m lies in the r-Sylow subgroup of order r^v.
  Fp b = a.pow(syl.m);

  // Pohlig–Hellman digits of dlog_eta(b), base r.
  // table of eta^(j * r^(v-1)), the r-th roots of unity, for digit lookups
  mpz_class rv1 = 1;
  for (unsigned i = 0; i + 1 < syl.v; ++i) rv1 *= r;
  Fp zeta = eta.pow(rv1);  // primitive r-th root of unity
  std::vector<Fp> unity(r, F.one());
  for (unsigned j = 1; j < r; ++j) unity[j] = unity[j - 1] * zeta;

  mpz_class e = 0;       // digits accumulated
  mpz_class rpow = 1;    // r^i
  Fp g = b;
  for (unsigned i = 0; i < syl.v; ++i) {
    // digit d_i: (b * eta^-e)^(r^(v-1-i)) = zeta^(d_i)
    mpz_class shift = 1;
    for (unsigned k = 0; k + 1 + i < syl.v; ++k) shift *= r;
    Fp probe = g.pow(shift);
    unsigned digit = r;
    for (unsigned j = 0; j < r; ++j)
      if (probe == unity[j]) {
        digit = j;
        break;
      }
    if (digit == r) throw InternalError("Sylow discrete log failed");
    e += rpow * digit;
    if (digit != 0) g = g * eta.pow(rpow * digit).inv();
    rpow *= r;
  }

  if (mpz_divisible_ui_p(e.get_mpz_t(), r) == 0) return out;  // not an r-th power

  // 1 = m*alpha + r^v*beta; root = eta^((e/r)*alpha) * a^(r^(v-1)*beta)
  mpz_class rv = rpow;  // r^v
  mpz_class alpha, beta, gcd;
  mpz_gcdext(gcd.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t(), syl.m.get_mpz_t(), rv.get_mpz_t());
  if (gcd != 1) throw InternalError("gcd(m, r^v) != 1");
  mpz_class er = e / r;
  mpz_class exp1;
  mpz_mod(exp1.get_mpz_t(), mpz_class(er * alpha).get_mpz_t(), rv.get_mpz_t());
  mpz_class exp2 = rv1 * beta;
  mpz_class order = F.modulus() - 1;
  mpz_mod(exp2.get_mpz_t(), exp2.get_mpz_t(), order.get_mpz_t());
  Fp w = eta.pow(exp1) * a.pow(exp2);

  out.push_back(w);
  for (unsigned j = 1; j < r; ++j) out.push_back(out.back() * zeta);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Fp> rth_roots(const Fp& a, unsigned r) { return amm_roots(a, r); }

std::optional<std::pair<Fp, Fp>> sqrt(const Fp& a) {
  auto roots = amm_roots(a, 2);
  if (roots.empty()) return std::nullopt;
  if (roots.size() == 1) return std::make_pair(roots[0], roots[0]);  // a = 0
  return std::make_pair(roots[0], roots[1]);
}

std::vector<Fp> cbrt_all(const Fp& a) {
  const PrimeField& F = *a.field();
  if (F.divides_order(3)) return amm_roots(a, 3);
  // q = 2 mod 3: cubing is a bijection, unique root a^((2q-1)/3)
  mpz_class e = (2 * F.modulus() - 1) / 3;
  return {a.pow(e)};
}

bool is_nth_power(const Fp& a, unsigned n) {
  const PrimeField& F = *a.field();
  if (a.is_zero()) throw InvalidInput("is_nth_power is undefined at zero");
  mpz_class qm1 = F.modulus() - 1;
  if (mpz_divisible_ui_p(qm1.get_mpz_t(), n) == 0)
    throw InvalidInput("n does not divide q - 1");
  return a.pow(qm1 / n).is_one();
}

Fp smallest_non_nth_power(const PrimeField& F, unsigned n) {
  for (mpz_class c = 2; c < F.modulus(); ++c) {
    Fp a = F.make(c);
    if (!is_nth_power(a, n)) return a;
  }
  throw InternalError("no non-n-th power found");
}

}  // namespace tzc
