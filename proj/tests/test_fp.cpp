#include <doctest.h>

#include <set>

#include "tzc/fp.hpp"

using namespace tzc;

TEST_CASE("basic arithmetic mod 7") {
  PrimeField F(7);
  CHECK(F.make_int(3).inv() == F.make_int(5));  // 3*5 = 15 = 1 mod 7
  CHECK(F.make_int(6) + F.make_int(4) == F.make_int(3));
  CHECK(F.make_int(2) - F.make_int(5) == F.make_int(4));
  CHECK((-F.make_int(3)) == F.make_int(4));
  CHECK(F.make_int(4) * F.make_int(5) == F.make_int(6));
  CHECK_THROWS_AS(F.zero().inv(), DivisionByZero);
}

TEST_CASE("large modulus exact arithmetic") {
  // 2^79 - 67 and a 128-bit prime both go through the arbitrary-precision path
  mpz_class q79 = (mpz_class(1) << 79) - 67;
  PrimeField F(q79);
  CHECK_FALSE(F.fits_word());
  Fp a = F.parse("260970034280824124824722");
  Fp b = F.parse("431820813779055023676698");
  CHECK((a * b) * a.inv() == b);
  CHECK(a.pow(q79 - 1).is_one());

  mpz_class q128 = (mpz_class(1) << 127) - 1;  // Mersenne prime
  PrimeField G(q128);
  Fp c = G.make(mpz_class("170141183460469231731687303715884105721"));
  CHECK((c * c.inv()).is_one());
}

TEST_CASE("field axioms on random triples") {
  PrimeField F7(7);
  mpz_class q60 = (mpz_class(1) << 60) - 93;
  PrimeField F60(q60);
  Rng rng(42);
  for (const PrimeField* F : {&F7, &F60}) {
    for (int i = 0; i < 10000; ++i) {
      Fp a = random_fp(*F, rng), b = random_fp(*F, rng), c = random_fp(*F, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == F->zero());
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
  }
}

TEST_CASE("sqrt examples and properties") {
  PrimeField F7(7);
  auto r = sqrt(F7.make_int(2));
  REQUIRE(r.has_value());
  CHECK(r->first == F7.make_int(3));
  CHECK(r->second == F7.make_int(4));
  CHECK_FALSE(sqrt(F7.make_int(3)).has_value());

  PrimeField F13(13);
  auto r13 = sqrt(F13.make_int(12));
  REQUIRE(r13.has_value());
  CHECK(r13->first == F13.make_int(5));  // brute force: 5^2 = 25 = 12, 8^2 = 64 = 12
  CHECK(r13->second == F13.make_int(8));

  // every residue: root squares back, pair sums to zero, smaller first
  for (long q : {7L, 13L, 31L, 101L}) {
    PrimeField F(q);
    for (long v = 0; v < q; ++v) {
      auto s = sqrt(F.make_int(v));
      if (!s.has_value()) continue;
      CHECK(s->first * s->first == F.make_int(v));
      CHECK(s->first + s->second == F.zero());
      CHECK(s->first.cmp(s->second) <= 0);
    }
    // exactly (q-1)/2 nonzero residues have roots
    int with_root = 0;
    for (long v = 1; v < q; ++v)
      if (sqrt(F.make_int(v)).has_value()) ++with_root;
    CHECK(with_root == (q - 1) / 2);
  }
}

TEST_CASE("cube roots") {
  PrimeField F7(7);
  auto roots1 = cbrt_all(F7.one());
  REQUIRE(roots1.size() == 3);
  CHECK(roots1[0] == F7.make_int(1));
  CHECK(roots1[1] == F7.make_int(2));
  CHECK(roots1[2] == F7.make_int(4));
  CHECK(cbrt_all(F7.make_int(3)).empty());
  CHECK(cbrt_all(F7.zero()) == std::vector<Fp>{F7.zero()});

  // q = 2 mod 3: cubing is a bijection
  PrimeField F5(5);
  for (long v = 0; v < 5; ++v) {
    auto roots = cbrt_all(F5.make_int(v));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] * roots[0] * roots[0] == F5.make_int(v));
  }

  // root count is 0, 1 or 3 as dictated by q mod 3, and all roots cube back
  for (long q : {7L, 13L, 31L, 11L, 17L}) {
    PrimeField F(q);
    bool kummer = (q - 1) % 3 == 0;
    for (long v = 0; v < q; ++v) {
      auto roots = cbrt_all(F.make_int(v));
      for (const auto& r : roots) CHECK(r * r * r == F.make_int(v));
      if (v == 0)
        CHECK(roots.size() == 1);
      else if (kummer)
        CHECK((roots.size() == 0 || roots.size() == 3));
      else
        CHECK(roots.size() == 1);
    }
  }
}

TEST_CASE("is_nth_power") {
  PrimeField F7(7);
  CHECK(is_nth_power(F7.make_int(6), 3));       // 3^3 = 27 = 6
  CHECK_FALSE(is_nth_power(F7.make_int(3), 3)); // cubes mod 7 are {1, 6}
  PrimeField F11(11);
  CHECK(is_nth_power(F11.make_int(10), 5));     // fifth powers mod 11 are {1, 10}
  CHECK_THROWS_AS(is_nth_power(F7.zero(), 3), InvalidInput);
  CHECK_THROWS_AS(is_nth_power(F7.make_int(2), 5), InvalidInput);  // 5 does not divide 6

  // agreement with brute force for q <= 100
  for (long q : {7L, 13L, 31L, 61L, 97L}) {
    PrimeField F(q);
    for (unsigned n : {2u, 3u, 5u}) {
      if ((q - 1) % n != 0) continue;
      std::set<long> powers;
      for (long v = 1; v < q; ++v) {
        mpz_class p = F.make_int(v).pow(mpz_class(n)).value();
        powers.insert(p.get_si());
      }
      for (long v = 1; v < q; ++v)
        CHECK(is_nth_power(F.make_int(v), n) == (powers.count(v) > 0));
    }
  }
}

TEST_CASE("smallest non-nth-power helper") {
  PrimeField F7(7);
  CHECK(smallest_non_nth_power(F7, 3) == F7.make_int(2));  // cubes mod 7 are {1, 6}
  PrimeField F11(11);
  CHECK(smallest_non_nth_power(F11, 5) == F11.make_int(2));
  PrimeField F13(13);
  CHECK_FALSE(is_nth_power(smallest_non_nth_power(F13, 3), 3));
}

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(PrimeField(10), InvalidInput);
  CHECK_THROWS_AS(PrimeField(3), InvalidInput);
  CHECK_THROWS_AS(PrimeField(1), InvalidInput);
}

TEST_CASE("mixed-field operations are rejected") {
  PrimeField F7(7), F13(13);
  CHECK_THROWS_AS(F7.one() + F13.one(), MismatchedField);
  CHECK(F7.one() != F13.one());
}

TEST_CASE("serialization") {
  mpz_class q79 = (mpz_class(1) << 79) - 67;
  PrimeField F(q79);
  CHECK(F.byte_length() == 10);
  Fp a = F.parse("178447193035157787121145");
  std::vector<unsigned char> buf;
  a.to_bytes(buf);
  CHECK(buf.size() == 10);
  CHECK(Fp::from_bytes(F, buf.data(), buf.size()) == a);
  CHECK(a.str() == "178447193035157787121145");

  PrimeField F7(7);
  std::vector<unsigned char> b7;
  F7.make_int(5).to_bytes(b7);
  CHECK(b7 == std::vector<unsigned char>{5});
  std::vector<unsigned char> over{9};
  CHECK_THROWS_AS(Fp::from_bytes(F7, over.data(), 1), InvalidInput);
}
