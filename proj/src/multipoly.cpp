#include "tzc/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <unordered_map>

namespace tzc {

MultiPoly::MultiPoly(const PrimeField* F, unsigned arity) : F_(F), arity_(arity) {
  if (arity > Mono::kMaxVars) throw InvalidInput("arity exceeds the monomial capacity");
}

MultiPoly MultiPoly::constant(const PrimeField& F, unsigned arity, const Fp& c) {
  MultiPoly p(&F, arity);
  if (!c.is_zero()) p.terms_.push_back({Mono{}, c});
  return p;
}

MultiPoly MultiPoly::variable(const PrimeField& F, unsigned arity, unsigned var) {
  if (var >= arity) throw InvalidInput("variable index out of range");
  MultiPoly p(&F, arity);
  Mono m;
  m.set_exp(var, 1);
  p.terms_.push_back({m, F.one()});
  return p;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (arity_ != o.arity_) throw InvalidInput("polynomial arity mismatch");
  if (F_ != o.F_ && F_->modulus() != o.F_->modulus()) throw MismatchedField();
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg);
  return d;
}

unsigned MultiPoly::degree_in(unsigned var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
  return d;
}

Fp MultiPoly::coefficient(const std::vector<unsigned>& exps) const {
  Mono key;
  for (unsigned v = 0; v < exps.size() && v < arity_; ++v) key.set_exp(v, exps[v]);
  for (const auto& [m, c] : terms_)
    if (m == key) return c;
  return F_->zero();
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly out(F_, arity_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && o.terms_[j].first.grlex_less(terms_[i].first))) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || terms_[i].first.grlex_less(o.terms_[j].first)) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Fp s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) out.terms_.push_back({terms_[i].first, s});
      ++i;
      ++j;
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(F_, arity_);
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.terms_.push_back({m, -c});
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::scaled(const Fp& s) const {
  MultiPoly out(F_, arity_);
  if (s.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Fp p = c * s;
    if (!p.is_zero()) out.terms_.push_back({m, p});
  }
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly out(F_, arity_);
  if (terms_.empty() || o.terms_.empty()) return out;
  std::unordered_map<uint64_t, Fp> acc;
  acc.reserve(terms_.size() + o.terms_.size());
  const auto& small = terms_.size() <= o.terms_.size() ? terms_ : o.terms_;
  const auto& large = terms_.size() <= o.terms_.size() ? o.terms_ : terms_;
  for (const auto& [ms, cs] : small) {
    for (const auto& [ml, cl] : large) {
      uint64_t key = ms.pk + ml.pk;
      Fp prod = cs * cl;
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, prod);
      else
        it->second = it->second + prod;
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [pk, c] : acc) {
    if (c.is_zero()) continue;
    Mono m;
    m.pk = pk;
    for (unsigned v = 0; v < Mono::kMaxVars; ++v)
      m.deg += (pk >> Mono::shift(v)) & Mono::kMask;
    out.terms_.push_back({m, c});
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const auto& a, const auto& b) { return b.first.grlex_less(a.first); });
  return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (arity_ != o.arity_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].first == o.terms_[i].first) || !(terms_[i].second == o.terms_[i].second))
      return false;
  return true;
}

MultiPoly MultiPoly::permuted(const std::vector<unsigned>& perm) const {
  if (perm.size() != arity_) throw InvalidInput("permutation arity mismatch");
  MultiPoly out(F_, arity_);
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Mono nm;
    for (unsigned v = 0; v < arity_; ++v) nm.set_exp(perm[v], m.exp(v));
    out.terms_.push_back({nm, c});
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const auto& a, const auto& b) { return b.first.grlex_less(a.first); });
  return out;
}

bool MultiPoly::is_symmetric() const {
  // adjacent transpositions generate the full symmetric group
  for (unsigned k = 0; k + 1 < arity_; ++k) {
    std::vector<unsigned> perm(arity_);
    for (unsigned v = 0; v < arity_; ++v) perm[v] = v;
    std::swap(perm[k], perm[k + 1]);
    if (!(permuted(perm) == *this)) return false;
  }
  return true;
}

MultiPoly MultiPoly::with_arity(unsigned new_arity) const {
  if (new_arity < arity_) {
    for (unsigned v = new_arity; v < arity_; ++v)
      if (degree_in(v) != 0) throw InvalidInput("cannot shrink arity: variable in use");
  }
  MultiPoly out(F_, new_arity);
  out.terms_ = terms_;
  return out;
}

MultiPoly MultiPoly::remapped(unsigned new_arity, const std::vector<unsigned>& map) const {
  if (map.size() != arity_) throw InvalidInput("variable map arity mismatch");
  MultiPoly out(F_, new_arity);
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Mono nm;
    for (unsigned v = 0; v < arity_; ++v) {
      unsigned e = m.exp(v);
      if (e) nm.set_exp(map[v], e);
    }
    out.terms_.push_back({nm, c});
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const auto& a, const auto& b) { return b.first.grlex_less(a.first); });
  return out;
}

UniPoly<Fp> MultiPoly::partial_eval_last(const std::vector<Fp>& vals) const {
  if (vals.size() + 1 != arity_) throw InvalidInput("partial evaluation arity mismatch");
  unsigned last = arity_ - 1;
  std::vector<std::vector<Fp>> pows(last);
  for (unsigned v = 0; v < last; ++v) {
    unsigned d = degree_in(v);
    pows[v].reserve(d + 1);
    pows[v].push_back(F_->one());
    for (unsigned k = 1; k <= d; ++k) pows[v].push_back(pows[v].back() * vals[v]);
  }
  std::vector<Fp> out(degree_in(last) + 1, F_->zero());
  for (const auto& [m, c] : terms_) {
    Fp t = c;
    for (unsigned v = 0; v < last; ++v) {
      unsigned e = m.exp(v);
      if (e) t = t * pows[v][e];
    }
    unsigned d = m.exp(last);
    out[d] = out[d] + t;
  }
  return UniPoly<Fp>(std::move(out));
}

std::vector<MultiPoly> MultiPoly::coeffs_in_last() const {
  unsigned last = arity_ - 1;
  std::vector<MultiPoly> out(degree_in(last) + 1, MultiPoly(F_, arity_));
  for (const auto& [m, c] : terms_) {
    Mono nm = m;
    unsigned d = m.exp(last);
    nm.set_exp(last, 0);
    out[d].terms_.push_back({nm, c});
  }
  for (auto& p : out)
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const auto& a, const auto& b) { return b.first.grlex_less(a.first); });
  return out;
}

void MultiPoly::add_term(const Mono& m, const Fp& c) {
  if (!c.is_zero()) terms_.push_back({m, c});
}

void MultiPoly::finish() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return b.first.grlex_less(a.first); });
  std::vector<std::pair<Mono, Fp>> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second = merged.back().second + t.second;
    else
      merged.push_back(t);
  }
  terms_.clear();
  for (auto& t : merged)
    if (!t.second.is_zero()) terms_.push_back(t);
}

std::string MultiPoly::str(const std::string& var_prefix) const {
  std::vector<std::string> names;
  for (unsigned v = 0; v < arity_; ++v) names.push_back(var_prefix + std::to_string(v));
  return str(names);
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    bool unit = c.is_one() && m.deg > 0;
    if (!unit) s += c.str();
    bool first = unit;
    for (unsigned v = 0; v < arity_; ++v) {
      unsigned e = m.exp(v);
      if (!e) continue;
      if (!first) s += "*";
      s += names[v];
      if (e > 1) s += "^" + std::to_string(e);
      first = false;
    }
  }
  return s;
}

uint64_t MultiPoly::content_hash() const {
  uint64_t h = 0xcbf29ce484222325ULL ^ terms_.size();
  for (const auto& [m, c] : terms_) {
    h ^= m.pk;
    h *= 0x100000001b3ULL;
    h = hash_bytes_of(c, h);
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

MultiPoly resultant_last_var(const MultiPoly& p, const MultiPoly& q) {
  if (p.arity() != q.arity()) throw InvalidInput("resultant operands live in different rings");
  const PrimeField& F = *p.field();
  const unsigned arity = p.arity();
  auto cp = p.coeffs_in_last();
  auto cq = q.coeffs_in_last();
  const int m = static_cast<int>(cp.size()) - 1;
  const int l = static_cast<int>(cq.size()) - 1;
  if (m < 1 || l < 1) throw InvalidInput("resultant needs positive degree in the last variable");
  const int N = m + l;

  // Sylvester matrix with the q-coefficient block first: same normalization
  // as the univariate resultant (res(x - a, x - b) = b - a). The q rows are
  // also the sparser ones in the summation-polynomial use.
  std::vector<std::vector<MultiPoly>> rows;
  for (int r = 0; r < m; ++r) {
    std::vector<MultiPoly> row(N, MultiPoly(&F, arity));
    for (int j = 0; j <= l; ++j) row[r + j] = cq[l - j];
    rows.push_back(std::move(row));
  }
  for (int r = 0; r < l; ++r) {
    std::vector<MultiPoly> row(N, MultiPoly(&F, arity));
    for (int j = 0; j <= m; ++j) row[r + j] = cp[m - j];
    rows.push_back(std::move(row));
  }

  // cofactor expansion memoized on the set of consumed columns
  std::unordered_map<uint64_t, MultiPoly> memo;
  auto det = [&](auto&& self, uint64_t used) -> MultiPoly {
    int row = __builtin_popcountll(used);
    if (row == N) return MultiPoly::constant(F, arity, F.one());
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    MultiPoly acc(&F, arity);
    int sign = 0;
    for (int c = 0; c < N; ++c) {
      if (used & (1ull << c)) continue;
      if (!rows[row][c].is_zero()) {
        MultiPoly contrib = rows[row][c] * self(self, used | (1ull << c));
        acc = (sign % 2 == 0) ? acc + contrib : acc - contrib;
      }
      ++sign;
    }
    return memo.emplace(used, std::move(acc)).first->second;
  };
  return det(det, 0);
}

MultiPoly elementary_symmetric(const PrimeField& F, unsigned arity, unsigned i) {
  if (i == 0) return MultiPoly::constant(F, arity, F.one());
  if (i > arity) return MultiPoly(&F, arity);
  std::vector<MultiPoly> e(i + 1, MultiPoly(&F, arity));
  e[0] = MultiPoly::constant(F, arity, F.one());
  for (unsigned v = 0; v < arity; ++v) {
    MultiPoly x = MultiPoly::variable(F, arity, v);
    for (unsigned k = std::min<unsigned>(i, v + 1); k >= 1; --k) {
      e[k] = e[k] + x * e[k - 1];
      if (k == 1) break;
    }
  }
  return e[i];
}

MultiPoly symmetrize(const MultiPoly& f) {
  const PrimeField& F = *f.field();
  const unsigned n = f.arity();
  if (f.is_zero()) return MultiPoly(&F, n);
  if (!f.is_symmetric()) throw NotSymmetric();

  std::vector<MultiPoly> e(n + 1, MultiPoly(&F, n));
  for (unsigned i = 0; i <= n; ++i) e[i] = elementary_symmetric(F, n, i);

  // cache of expanded products e_1^d1 * ... * e_n^dn keyed by packed d
  std::unordered_map<uint64_t, MultiPoly> eprod;
  eprod.emplace(0, MultiPoly::constant(F, n, F.one()));
  auto product_for = [&](auto&& self, const Mono& d) -> const MultiPoly& {
    auto it = eprod.find(d.pk);
    if (it != eprod.end()) return it->second;
    for (unsigned v = 0; v < n; ++v) {
      if (d.exp(v) == 0) continue;
      Mono prev = d;
      prev.set_exp(v, d.exp(v) - 1);
      const MultiPoly& base = self(self, prev);
      MultiPoly grown = base * e[v + 1];
      return eprod.emplace(d.pk, std::move(grown)).first->second;
    }
    throw InternalError("empty product requested");
  };

  // working remainder as a hash map plus a lazy max-heap over monomials
  std::unordered_map<uint64_t, Fp> work;
  using HeapEntry = std::pair<uint32_t, uint64_t>;  // (deg, pk): grlex order
  std::priority_queue<HeapEntry> heap;
  for (const auto& [m, c] : f.terms()) {
    work.emplace(m.pk, c);
    heap.push({m.deg, m.pk});
  }

  MultiPoly g(&F, n);
  size_t guard = 0;
  while (!heap.empty()) {
    auto [deg, pk] = heap.top();
    heap.pop();
    while (!heap.empty() && heap.top().second == pk && heap.top().first == deg) heap.pop();
    auto it = work.find(pk);
    if (it == work.end() || it->second.is_zero()) continue;
    if (++guard > 2000000) throw InternalError("symmetrization did not terminate");

    Mono lead;
    lead.pk = pk;
    lead.deg = deg;
    // leading exponents of a symmetric polynomial form a partition
    Mono d;
    for (unsigned v = 0; v + 1 < n; ++v) {
      unsigned a = lead.exp(v), b = lead.exp(v + 1);
      if (a < b) throw NotSymmetric("leading monomial is not a partition");
      d.set_exp(v, a - b);
    }
    d.set_exp(n - 1, lead.exp(n - 1));

    const MultiPoly& prod = product_for(product_for, d);
    if (!(prod.leading().first == lead)) throw InternalError("leading-term mismatch");

    Fp c = it->second;
    for (const auto& [m, pc] : prod.terms()) {
      Fp delta = c * pc;
      auto wit = work.find(m.pk);
      if (wit == work.end()) {
        work.emplace(m.pk, -delta);
        heap.push({m.deg, m.pk});
      } else {
        wit->second = wit->second - delta;
        if (!wit->second.is_zero()) heap.push({m.deg, m.pk});
      }
    }
    g.add_term(d, c);
  }
  for (const auto& [pk, c] : work)
    if (!c.is_zero()) throw InternalError("nonzero residue after symmetrization");
  g.finish();
  return g;
}

}  // namespace tzc
