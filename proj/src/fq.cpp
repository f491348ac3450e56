#include "tzc/fq.hpp"

#include <algorithm>
#include <ostream>

namespace tzc {

ExtField::ExtField(const PrimeField& base, unsigned n, const Fp& mu)
    : F_(&base), n_(n), mu_(mu) {
  if (n != 2 && n != 3 && n != 5) throw InvalidInput("extension degree must be 2, 3 or 5");
  mpz_class qm1 = base.modulus() - 1;
  if (mpz_divisible_ui_p(qm1.get_mpz_t(), n) == 0)
    throw InvalidInput("n must divide q - 1 (Kummer case)");
  if (mu.field() != &base && mu.field()->modulus() != base.modulus())
    throw MismatchedField();
  if (mu.is_zero() || is_nth_power(mu, n))
    throw InvalidInput("mu must be a non-n-th power in F_q");
  b_ = qm1 / n;
  Q_ = 1;
  for (unsigned i = 0; i < n; ++i) Q_ *= base.modulus();

  // twists_[i][j] = mu^(b * (i*j mod n)); mu^(b*n) = mu^(q-1) = 1
  Fp mub = mu_.pow(b_);
  std::array<Fp, kMaxDegree> mub_pow;  // mub^k for k in [0, n)
  mub_pow[0] = base.one();
  for (unsigned k = 1; k < n; ++k) mub_pow[k] = mub_pow[k - 1] * mub;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) twists_[i][j] = mub_pow[(i * j) % n];

  if (mub.is_one()) throw InternalError("mu^b = 1: mu is an n-th power after all");
}

ExtEl ExtField::from_base(const Fp& a) const {
  ExtEl e;
  e.K_ = this;
  e.c_[0] = (a.field() == F_) ? a : F_->make(a.value());
  for (unsigned j = 1; j < n_; ++j) e.c_[j] = F_->zero();
  return e;
}

ExtEl ExtField::from_coords(const std::vector<Fp>& coords) const {
  if (coords.size() != n_) throw InvalidInput("coordinate vector has wrong length");
  ExtEl e;
  e.K_ = this;
  for (unsigned j = 0; j < n_; ++j)
    e.c_[j] = (coords[j].field() == F_) ? coords[j] : F_->make(coords[j].value());
  return e;
}

ExtEl ExtField::zero() const { return from_base(F_->zero()); }
ExtEl ExtField::one() const { return from_base(F_->one()); }

ExtEl ExtField::zeta() const {
  ExtEl e = zero();
  e.c_[1] = F_->one();
  return e;
}

const ExtField::SylowData& ExtField::sqrt_sylow() const {
  std::call_once(syl_once_, [this] {
    SylowData d;
    d.m = Q_ - 1;
    while (mpz_even_p(d.m.get_mpz_t())) {
      d.m /= 2;
      d.v++;
    }
    mpz_class rv1 = 1;
    for (unsigned i = 0; i + 1 < d.v; ++i) rv1 *= 2;
    // deterministic scan zeta + k for a generator of the 2-Sylow subgroup
    for (mpz_class k = 0;; ++k) {
      ExtEl gamma = zeta() + from_base(F_->make(k));
      ExtEl eta = gamma.pow(d.m);
      if (!eta.pow(rv1).is_one()) {
        for (unsigned j = 0; j < n_; ++j) d.eta_coords[j] = eta.coord(j);
        break;
      }
    }
    syl_ = d;
  });
  return syl_;
}

void ExtEl::check_attached() const {
  if (!K_) throw InternalError("use of detached extension element");
}

void ExtEl::check_same(const ExtEl& o) const {
  check_attached();
  o.check_attached();
  if (K_ == o.K_) return;
  if (K_->degree() != o.K_->degree() || K_->base().modulus() != o.K_->base().modulus() ||
      !(K_->mu() == o.K_->mu()))
    throw MismatchedField();
}

bool ExtEl::is_zero() const {
  check_attached();
  for (unsigned j = 0; j < degree(); ++j)
    if (!c_[j].is_zero()) return false;
  return true;
}

bool ExtEl::is_one() const {
  check_attached();
  if (!c_[0].is_one()) return false;
  for (unsigned j = 1; j < degree(); ++j)
    if (!c_[j].is_zero()) return false;
  return true;
}

bool ExtEl::is_rational() const {
  check_attached();
  for (unsigned j = 1; j < degree(); ++j)
    if (!c_[j].is_zero()) return false;
  return true;
}

Fp ExtEl::to_base() const {
  if (!is_rational()) throw InvalidInput("element does not lie in the base field");
  return c_[0];
}

ExtEl ExtEl::operator+(const ExtEl& o) const {
  check_same(o);
  ExtEl r;
  r.K_ = K_;
  for (unsigned j = 0; j < degree(); ++j) r.c_[j] = c_[j] + o.c_[j];
  return r;
}

ExtEl ExtEl::operator-(const ExtEl& o) const {
  check_same(o);
  ExtEl r;
  r.K_ = K_;
  for (unsigned j = 0; j < degree(); ++j) r.c_[j] = c_[j] - o.c_[j];
  return r;
}

ExtEl ExtEl::operator-() const {
  check_attached();
  ExtEl r;
  r.K_ = K_;
  for (unsigned j = 0; j < degree(); ++j) r.c_[j] = -c_[j];
  return r;
}

ExtEl ExtEl::operator*(const ExtEl& o) const {
  check_same(o);
  const unsigned n = degree();
  ExtEl r;
  r.K_ = K_;
  // schoolbook convolution with zeta^n = mu reduction
  for (unsigned k = 0; k < n; ++k) r.c_[k] = K_->base().zero();
  for (unsigned i = 0; i < n; ++i) {
    if (c_[i].is_zero()) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (o.c_[j].is_zero()) continue;
      Fp prod = c_[i] * o.c_[j];
      unsigned k = i + j;
      if (k >= n) {
        k -= n;
        prod = prod * K_->mu();
      }
      r.c_[k] = r.c_[k] + prod;
    }
  }
  return r;
}

ExtEl ExtEl::scaled(const Fp& s) const {
  check_attached();
  ExtEl r;
  r.K_ = K_;
  for (unsigned j = 0; j < degree(); ++j) r.c_[j] = c_[j] * s;
  return r;
}

ExtEl ExtEl::frobenius(unsigned i) const {
  check_attached();
  const unsigned n = degree();
  i %= n;
  if (i == 0) return *this;
  ExtEl r;
  r.K_ = K_;
  for (unsigned j = 0; j < n; ++j) r.c_[j] = c_[j] * K_->twist(i, j);
  return r;
}

ExtEl ExtEl::inv() const {
  check_attached();
  if (is_zero()) throw DivisionByZero();
  const unsigned n = degree();
  // product of the nontrivial conjugates; times *this it is the norm, in F_q
  ExtEl p = frobenius(1);
  for (unsigned i = 2; i < n; ++i) p = p * frobenius(i);
  ExtEl norm = *this * p;
  if (!norm.is_rational()) throw InternalError("field norm not rational");
  return p.scaled(norm.c_[0].inv());
}

ExtEl ExtEl::pow(const mpz_class& e) const {
  check_attached();
  if (e == 0) return one_like();
  ExtEl acc = one_like();
  size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = nbits; i-- > 0;) {
    acc = acc * acc;
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc * *this;
  }
  return acc;
}

bool ExtEl::operator==(const ExtEl& o) const {
  if (!K_ || !o.K_) return K_ == o.K_;
  if (degree() != o.degree()) return false;
  for (unsigned j = 0; j < degree(); ++j)
    if (!(c_[j] == o.c_[j])) return false;
  return true;
}

int ExtEl::cmp(const ExtEl& o) const {
  check_same(o);
  for (unsigned j = 0; j < degree(); ++j) {
    int c = c_[j].cmp(o.c_[j]);
    if (c != 0) return c;
  }
  return 0;
}

ExtEl ExtEl::zero_like() const {
  check_attached();
  return K_->zero();
}

ExtEl ExtEl::one_like() const {
  check_attached();
  return K_->one();
}

mpz_class ExtEl::field_order() const {
  check_attached();
  return K_->order();
}

std::string ExtEl::str() const {
  check_attached();
  std::string s = "[";
  for (unsigned j = 0; j < degree(); ++j) {
    if (j) s += ",";
    s += c_[j].str();
  }
  return s + "]";
}

void ExtEl::to_bytes(std::vector<unsigned char>& out) const {
  check_attached();
  for (unsigned j = 0; j < degree(); ++j) c_[j].to_bytes(out);
}

ExtEl ExtEl::from_bytes(const ExtField& K, const unsigned char* p, size_t len) {
  size_t w = K.base().byte_length();
  if (len != w * K.degree()) throw InvalidInput("encoded extension element has wrong length");
  std::vector<Fp> coords;
  for (unsigned j = 0; j < K.degree(); ++j)
    coords.push_back(Fp::from_bytes(K.base(), p + j * w, w));
  return K.from_coords(coords);
}

std::ostream& operator<<(std::ostream& os, const ExtEl& a) { return os << a.str(); }

std::vector<ExtEl> norm_conjugates(const ExtEl& a) {
  std::vector<ExtEl> out;
  for (unsigned i = 0; i < a.degree(); ++i) out.push_back(a.frobenius(i));
  return out;
}

std::optional<std::pair<ExtEl, ExtEl>> ext_sqrt(const ExtEl& a) {
  const ExtField& K = *a.field();
  if (a.is_zero()) return std::make_pair(a, a);
  const auto& syl = K.sqrt_sylow();
  std::vector<Fp> ec(syl.eta_coords.begin(), syl.eta_coords.begin() + K.degree());
  ExtEl eta = K.from_coords(ec);

  // Tonelli–Shanks: b = a^m in the 2-Sylow subgroup, walk the digits.
  ExtEl b = a.pow(syl.m);
  ExtEl x = a.pow((syl.m + 1) / 2);  // a^((m+1)/2): x^2 = a * b
  ExtEl g = eta;
  unsigned r = syl.v;
  while (!b.is_one()) {
    // find least k with b^(2^k) = 1
    unsigned k = 0;
    ExtEl t = b;
    while (!t.is_one()) {
      t = t.square();
      ++k;
      if (k >= r) return std::nullopt;  // not a square
    }
    // g has order 2^r; replace x, b
    ExtEl gs = g;
    for (unsigned i = 0; i + k + 1 < r; ++i) gs = gs.square();  // g^(2^(r-k-1))
    x = x * gs;
    g = gs.square();
    b = b * g;
    r = k;
  }
  ExtEl other = -x;
  if (other < x) std::swap(x, other);
  return std::make_pair(x, other);
}

uint64_t hash_bytes_of(const ExtEl& a, uint64_t h) {
  std::vector<unsigned char> buf;
  a.to_bytes(buf);
  return fnv1a(buf.data(), buf.size(), h);
}

ExtEl random_ext(const ExtField& K, Rng& rng) {
  std::vector<Fp> coords;
  for (unsigned j = 0; j < K.degree(); ++j) coords.push_back(random_fp(K.base(), rng));
  return K.from_coords(coords);
}

}  // namespace tzc
