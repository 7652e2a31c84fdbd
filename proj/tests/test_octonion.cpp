#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "edcert/octonion.hpp"

using namespace edcert;
using Vec = OctonionAlgebra::Vec;

namespace {

Vec unit(int t) {
  Vec v{};
  v[t] = 1;
  return v;
}

Vec scaled(int t, const Rat& c) {
  Vec v{};
  v[t] = c;
  return v;
}

}  // namespace

TEST_CASE("doubling recovers the quaternion table on the low half") {
  OctonionAlgebra oct;
  // 1 is the unit.
  for (int t = 0; t < 8; ++t) {
    CHECK(oct.mul(unit(0), unit(t)) == unit(t));
    CHECK(oct.mul(unit(t), unit(0)) == unit(t));
  }
  // i^2 = j^2 = k^2 = -1; ij = k, ji = -k, jk = i, ki = j.
  for (int t = 1; t < 4; ++t) CHECK(oct.mul(unit(t), unit(t)) == scaled(0, -1));
  CHECK(oct.mul(unit(1), unit(2)) == unit(3));
  CHECK(oct.mul(unit(2), unit(1)) == scaled(3, -1));
  CHECK(oct.mul(unit(2), unit(3)) == unit(1));
  CHECK(oct.mul(unit(3), unit(1)) == unit(2));
}

TEST_CASE("the doubled unit multiplies as expected") {
  OctonionAlgebra oct;
  CHECK(oct.mul(unit(4), unit(4)) == scaled(0, -1));  // l^2 = -1
  CHECK(oct.mul(unit(1), unit(4)) == unit(5));        // i l = il
  CHECK(oct.mul(unit(4), unit(1)) == scaled(5, -1));  // l i = -il
  CHECK(oct.mul(unit(2), unit(4)) == unit(6));
  CHECK(oct.mul(unit(3), unit(4)) == unit(7));
  // Imaginary units anticommute pairwise.
  for (int a = 1; a < 8; ++a)
    for (int b = 1; b < 8; ++b) {
      if (a == b) continue;
      Vec ab = oct.mul(unit(a), unit(b));
      Vec ba = oct.mul(unit(b), unit(a));
      for (int t = 0; t < 8; ++t) CHECK(ab[t] == -ba[t]);
    }
}

TEST_CASE("the algebra is alternative but not associative") {
  OctonionAlgebra oct;
  // Associator of i, j, l does not vanish.
  Vec lhs = oct.mul(oct.mul(unit(1), unit(2)), unit(4));
  Vec rhs = oct.mul(unit(1), oct.mul(unit(2), unit(4)));
  CHECK(lhs != rhs);
  CHECK(lhs == unit(7));
  CHECK(rhs == scaled(7, -1));
  // Alternative laws on all basis pairs.
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      Vec x = unit(a), y = unit(b);
      CHECK(oct.mul(oct.mul(x, x), y) == oct.mul(x, oct.mul(x, y)));
      CHECK(oct.mul(oct.mul(y, x), x) == oct.mul(y, oct.mul(x, x)));
    }
}

TEST_CASE("the quadratic norm is multiplicative") {
  OctonionAlgebra oct;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 100; ++trial) {
    Vec x{}, y{};
    for (int t = 0; t < 8; ++t) {
      x[t] = Rat(num(rng), den(rng));
      y[t] = Rat(num(rng), den(rng));
    }
    CHECK(OctonionAlgebra::norm(oct.mul(x, y)) ==
          OctonionAlgebra::norm(x) * OctonionAlgebra::norm(y));
  }
  // Conjugation recovers the norm: x * conj(x) = N(x) * 1.
  Vec x{};
  for (int t = 0; t < 8; ++t) x[t] = Rat(t - 3, 2);
  Vec prod = oct.mul(x, OctonionAlgebra::conj(x));
  CHECK(prod == scaled(0, OctonionAlgebra::norm(x)));
}

TEST_CASE("sign involutions certify a rank-3 elementary abelian subgroup") {
  OctonionAlgebra oct;
  G2Cert cert = certify_g2_subgroup(oct);
  CHECK(cert.automorphisms);
  CHECK(cert.orders_and_commute);
  CHECK(cert.chars_distinct);
  CHECK(cert.certified());
  CHECK(cert.rank == 3);
}

TEST_CASE("a wrong sign vector is caught by the automorphism check") {
  OctonionAlgebra oct;
  // Negating i alone breaks ij = k: phi(i)phi(j) = -k but phi(k) = k.
  std::array<int, 8> bad = {+1, -1, +1, +1, +1, +1, +1, +1};
  auto apply = [&](Vec v) {
    for (int t = 0; t < 8; ++t)
      if (bad[t] < 0) v[t] = -v[t];
    return v;
  };
  Vec lhs = apply(oct.mul(unit(1), unit(2)));
  Vec rhs = oct.mul(apply(unit(1)), apply(unit(2)));
  CHECK(lhs != rhs);
}
