#include <doctest.h>

#include <set>

#include "tzc/roots.hpp"
#include "tzc/unipoly.hpp"

using namespace tzc;

namespace {

UniPoly<Fp> make_poly(const PrimeField& F, std::initializer_list<long> asc) {
  std::vector<Fp> c;
  for (long v : asc) c.push_back(F.make_int(v));
  return UniPoly<Fp>(std::move(c));
}

// Independent oracle: resultant via the Sylvester determinant, Gaussian
// elimination over the field. Rows of g first so that the convention
// matches resultant(x - a, x - b) = b - a.
Fp sylvester_resultant(const UniPoly<Fp>& f, const UniPoly<Fp>& g) {
  int m = f.deg(), l = g.deg();
  int N = m + l;
  const PrimeField& F = *f.c[0].field();
  std::vector<std::vector<Fp>> M(N, std::vector<Fp>(N, F.zero()));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= l; ++j) M[r][r + j] = g.c[l - j];
  for (int r = 0; r < l; ++r)
    for (int j = 0; j <= m; ++j) M[m + r][r + j] = f.c[m - j];
  Fp det = F.one();
  for (int col = 0; col < N; ++col) {
    int pivot = -1;
    for (int r = col; r < N; ++r)
      if (!M[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return F.zero();
    if (pivot != col) {
      std::swap(M[pivot], M[col]);
      det = -det;
    }
    det = det * M[col][col];
    Fp inv = M[col][col].inv();
    for (int r = col + 1; r < N; ++r) {
      if (M[r][col].is_zero()) continue;
      Fp factor = M[r][col] * inv;
      for (int j = col; j < N; ++j) M[r][j] = M[r][j] - factor * M[col][j];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("gcd") {
  PrimeField F(7);
  UniPoly<Fp> a = make_poly(F, {-1, 0, 1});  // x^2 - 1
  UniPoly<Fp> b = make_poly(F, {-1, 1});     // x - 1
  CHECK(gcd(a, b) == b);
  UniPoly<Fp> f = make_poly(F, {3, 1, 4});
  CHECK(gcd(f, UniPoly<Fp>{}) == monic(f));
  CHECK_THROWS_AS(gcd(UniPoly<Fp>{}, UniPoly<Fp>{}), InvalidInput);

  // two random products sharing a planted linear factor recover it
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    Fp root = random_fp(F, rng);
    UniPoly<Fp> common({-root, F.one()});
    UniPoly<Fp> p = common, q = common;
    for (int j = 0; j < 3; ++j) {
      p = p * UniPoly<Fp>({random_fp(F, rng), F.one()});
      q = q * UniPoly<Fp>({random_fp(F, rng), F.one()});
    }
    UniPoly<Fp> g = gcd(p, q);
    CHECK(g.eval(root).is_zero());
    CHECK(g % common == UniPoly<Fp>{});
  }
}

TEST_CASE("resultant examples") {
  PrimeField F(7);
  // resultant(x - a, x - b) = b - a
  for (long a = 0; a < 7; ++a)
    for (long b = 0; b < 7; ++b) {
      UniPoly<Fp> fa = make_poly(F, {-a, 1}), fb = make_poly(F, {-b, 1});
      CHECK(resultant(fa, fb) == F.make_int(b - a));
    }
  // resultant(x^2 - 1, x^2 - 4) = 9 = 2 over F_7
  CHECK(resultant(make_poly(F, {-1, 0, 1}), make_poly(F, {-4, 0, 1})) == F.make_int(2));
  CHECK_THROWS_AS(resultant(make_poly(F, {3}), make_poly(F, {-1, 1})), InvalidInput);
}

TEST_CASE("resultant against Sylvester determinant oracle") {
  PrimeField F(101);
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    std::vector<Fp> fc(4), gc(5);
    for (auto& c : fc) c = random_fp(F, rng);
    for (auto& c : gc) c = random_fp(F, rng);
    fc.back() = F.one();
    gc.back() = F.one();
    UniPoly<Fp> f(std::move(fc)), g(std::move(gc));
    CHECK(resultant(f, g) == sylvester_resultant(f, g));
  }
}

TEST_CASE("resultant vanishes iff common factor") {
  PrimeField F(31);
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    std::vector<Fp> fc(3), gc(4);
    for (auto& c : fc) c = random_fp(F, rng);
    for (auto& c : gc) c = random_fp(F, rng);
    fc.back() = F.one();
    gc.back() = F.one();
    UniPoly<Fp> f(std::move(fc)), g(std::move(gc));
    CHECK(resultant(f, g).is_zero() == (gcd(f, g).deg() > 0));
  }
}

TEST_CASE("roots over the prime field") {
  PrimeField F(7);
  auto r = roots_in_field(make_poly(F, {-1, 0, 0, 1}));  // x^3 - 1
  REQUIRE(r.size() == 3);
  CHECK(r[0] == F.make_int(1));
  CHECK(r[1] == F.make_int(2));
  CHECK(r[2] == F.make_int(4));
  CHECK(roots_in_field(make_poly(F, {1, 0, 1})).empty());  // x^2 + 1, -1 non-residue
  CHECK_THROWS_AS(roots_in_field(UniPoly<Fp>{}), InvalidInput);
}

TEST_CASE("roots agree with exhaustive evaluation on small fields") {
  for (long q : {7L, 31L, 1999L}) {
    PrimeField F(q);
    Rng rng(q);
    for (int i = 0; i < (q > 100 ? 20 : 100); ++i) {
      std::vector<Fp> c(1 + rng.below(7));
      for (auto& v : c) v = random_fp(F, rng);
      UniPoly<Fp> f(std::move(c));
      if (f.is_zero()) continue;
      auto r = roots_in_field(f);
      std::set<long> got;
      for (const auto& x : r) got.insert(x.value().get_si());
      std::set<long> want;
      for (long v = 0; v < q; ++v)
        if (f.eval(F.make_int(v)).is_zero()) want.insert(v);
      CHECK(got == want);
    }
  }
}

TEST_CASE("roots agree with exhaustive evaluation over small extension fields") {
  PrimeField F7(7);
  ExtField K3(F7, 3, F7.make_int(3));  // 343 elements
  PrimeField F11(11);
  ExtField K2(F11, 2, F11.make_int(2));  // 121 elements
  Rng rng(37);
  auto sweep = [&](const ExtField& K) {
    const PrimeField& F = K.base();
    uint64_t q = F.modulus_word();
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<ExtEl> c(1 + rng.below(6));
      for (auto& v : c) v = random_ext(K, rng);
      UniPoly<ExtEl> f(std::move(c));
      if (f.is_zero()) continue;
      auto roots = roots_in_field(f);
      std::set<std::string> got, want;
      for (const auto& r : roots) got.insert(r.str());
      // walk the whole field
      std::vector<uint64_t> idx(K.degree(), 0);
      while (true) {
        std::vector<Fp> coords;
        for (unsigned j = 0; j < K.degree(); ++j) coords.push_back(F.from_word(idx[j]));
        ExtEl x = K.from_coords(coords);
        if (f.eval(x).is_zero()) want.insert(x.str());
        unsigned pos = 0;
        while (pos < K.degree() && ++idx[pos] == q) idx[pos++] = 0;
        if (pos == K.degree()) break;
      }
      CHECK(got == want);
    }
  };
  sweep(K3);
  sweep(K2);
}

TEST_CASE("roots over an extension field via construct-then-solve") {
  PrimeField F(11);
  ExtField K(F, 5, F.make_int(2));
  Rng rng(17);

  // random monic sextic built as planted linears times an irreducible factor
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ExtEl> planted;
    UniPoly<ExtEl> f = poly_const(K.one());
    for (int j = 0; j < 4; ++j) {
      ExtEl r = random_ext(K, rng);
      planted.push_back(r);
      f = f * UniPoly<ExtEl>({-r, K.one()});
    }
    // an irreducible quadratic over F_{q^5}: x^2 - s with s a non-square
    ExtEl s;
    do {
      s = random_ext(K, rng);
    } while (s.is_zero() || ext_sqrt(s).has_value());
    f = f * UniPoly<ExtEl>({-s, K.zero(), K.one()});

    auto roots = roots_in_field(f);
    std::set<std::string> got, want;
    for (const auto& r : roots) got.insert(r.str());
    for (const auto& r : planted) want.insert(r.str());
    CHECK(got == want);
  }
}

TEST_CASE("every returned root evaluates to zero, no duplicates") {
  PrimeField F(31);
  ExtField K(F, 3, F.make_int(3));
  Rng rng(19);
  for (int i = 0; i < 30; ++i) {
    std::vector<ExtEl> c(1 + rng.below(5));
    for (auto& v : c) v = random_ext(K, rng);
    UniPoly<ExtEl> f(std::move(c));
    if (f.is_zero() || f.deg() < 1) continue;
    auto roots = roots_in_field(f);
    CHECK(roots.size() <= static_cast<size_t>(f.deg()));
    std::set<std::string> seen;
    for (const auto& r : roots) {
      CHECK(f.eval(r).is_zero());
      CHECK(seen.insert(r.str()).second);
    }
  }
}

TEST_CASE("fast extension-root path agrees with the generic one") {
  PrimeField F(31);
  SUBCASE("n = 3") {
    ExtField K(F, 3, F.make_int(3));
    Rng rng(23);
    for (int i = 0; i < 40; ++i) {
      std::vector<Fp> c(1 + rng.below(6));
      for (auto& v : c) v = random_fp(F, rng);
      UniPoly<Fp> f(std::move(c));
      if (f.is_zero() || f.deg() < 1) continue;
      auto fast = roots_in_ext(f, K);
      auto slow = roots_in_field(lift_to_ext(f, K));
      REQUIRE(fast.size() == slow.size());
      for (size_t j = 0; j < fast.size(); ++j) CHECK(fast[j] == slow[j]);
    }
  }
  SUBCASE("n = 5 with planted full orbit") {
    ExtField K(F, 5, F.make_int(2));
    Rng rng(29);
    for (int i = 0; i < 15; ++i) {
      // plant a Frobenius orbit: its minimal polynomial has F_q coefficients
      ExtEl r = random_ext(K, rng);
      UniPoly<ExtEl> fe = poly_const(K.one());
      for (unsigned j = 0; j < 5; ++j) fe = fe * UniPoly<ExtEl>({-r.frobenius(j), K.one()});
      std::vector<Fp> fc;
      for (const auto& coef : fe.c) {
        REQUIRE(coef.is_rational());
        fc.push_back(coef.to_base());
      }
      UniPoly<Fp> f(std::move(fc));
      auto roots = roots_in_ext(f, K);
      REQUIRE(roots.size() == (r.is_rational() ? 1u : 5u));
      bool found = false;
      for (const auto& x : roots) found = found || x == r;
      CHECK(found);
      auto slow = roots_in_field(lift_to_ext(f, K));
      CHECK(slow.size() == roots.size());
    }
  }
}

TEST_CASE("root-finding output is deterministic") {
  PrimeField F(1009);
  Rng rng(31);
  std::vector<Fp> c(7);
  for (auto& v : c) v = random_fp(F, rng);
  UniPoly<Fp> f(std::move(c));
  auto a = roots_in_field(f);
  auto b = roots_in_field(f);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
