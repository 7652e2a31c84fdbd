#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "edcert/tschirn.hpp"

using namespace edcert;

namespace {

RatFunc rf_var(const VarSet& v, std::size_t i) { return RatFunc::variable(v, i); }
RatFunc rf_const(const VarSet& v, long c) { return RatFunc::constant(v, Rat(c)); }

}  // namespace

TEST_CASE("general trinomial construction") {
  GeneralTrinomial G = general_trinomial(5, 3);
  CHECK(G.n == 5);
  CHECK(G.m == 3);
  CHECK(G.vars.size() == 4);  // a3 a4 a5 t
  CHECK(G.vars.name(G.a_index(3)) == "a3");
  CHECK(G.vars.name(G.a_index(5)) == "a5");
  CHECK(G.vars.name(G.t_index) == "t");
  CHECK(G.f.size() == 6);
  CHECK(G.f[5] == rf_const(G.vars, 1));
  CHECK(G.f[2] == rf_var(G.vars, G.a_index(3)));  // coefficient of x^{n-j}
  CHECK(G.f[0] == rf_var(G.vars, G.a_index(5)));
  CHECK(G.f[4].is_zero());  // j = 1 < m
  CHECK_THROWS_AS(G.a_index(2), std::out_of_range);
  CHECK_THROWS_AS(general_trinomial(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(general_trinomial(4, 4), std::invalid_argument);
}

TEST_CASE("quadratic shift has the textbook minimal polynomial") {
  // f = x^2 + p x + q, g = x + c  =>  t^2 + (p - 2c) t + (c^2 - p c + q)
  VarSet v({"p", "q", "c", "t"});
  RatFunc p = rf_var(v, 0), q = rf_var(v, 1), c = rf_var(v, 2);
  RatFunc one = rf_const(v, 1), zero = rf_const(v, 0);
  XPoly f = {q, p, one};
  XPoly g = {c, one};
  auto b = tschirnhaus_minpoly(f, g, v, 3);
  REQUIRE(b.size() == 3);
  CHECK(b[2] == one);
  CHECK(b[1] == p - rf_const(v, 2) * c);
  CHECK(b[0] == c * c - p * c + q);
}

TEST_CASE("identity substitution returns the input polynomial") {
  VarSet v({"t"});
  RatFunc one = rf_const(v, 1), zero = rf_const(v, 0);
  std::mt19937_64 rng(41);
  for (unsigned n = 2; n <= 6; ++n) {
    XPoly f(n + 1, zero);
    f[n] = one;
    for (unsigned i = 0; i < n; ++i)
      f[i] = rf_const(v, static_cast<long>(rng() % 19) - 9);
    XPoly g = {zero, one};  // g(x) = x
    auto b = tschirnhaus_minpoly(f, g, v, 0);
    REQUIRE(b.size() == n + 1);
    for (unsigned i = 0; i <= n; ++i) CHECK(b[i] == f[i]);
  }
}

TEST_CASE("input validation") {
  VarSet v({"t"});
  RatFunc one = rf_const(v, 1), zero = rf_const(v, 0), two = rf_const(v, 2);
  XPoly f = {one, zero, two};  // not monic
  CHECK_THROWS_AS(tschirnhaus_minpoly(f, {zero, one}, v, 0), std::invalid_argument);
  XPoly fm = {one, zero, one};
  XPoly gbig = {zero, zero, one};  // deg g = deg f
  CHECK_THROWS_AS(tschirnhaus_minpoly(fm, gbig, v, 0), std::invalid_argument);
  CHECK_THROWS_AS(tschirnhaus_minpoly({one}, {zero, one}, v, 0), std::invalid_argument);
  CHECK_THROWS_AS(xpoly_degree({zero, zero}), std::invalid_argument);
  CHECK(xpoly_degree({zero, one, zero}) == 1);
}

TEST_CASE("cubic with scaled generator collapses to one parameter") {
  // f = x^3 + a2 x + a3, g = (a2/a3) x  =>  t^3 + (a2^3/a3^2) t + a2^3/a3^2
  GeneralTrinomial G = general_trinomial(3, 2);
  RatFunc a2 = rf_var(G.vars, G.a_index(2)), a3 = rf_var(G.vars, G.a_index(3));
  XPoly g = {rf_const(G.vars, 0), a2 / a3};
  auto b = tschirnhaus_minpoly(G.f, g, G.vars, G.t_index);
  RatFunc want = (a2 * a2 * a2) / (a3 * a3);
  CHECK(b[3] == rf_const(G.vars, 1));
  CHECK(b[2].is_zero());
  CHECK(b[1] == want);
  CHECK(b[0] == want);
}

TEST_CASE("constant generator gives a pure power") {
  VarSet v({"t"});
  RatFunc one = rf_const(v, 1), zero = rf_const(v, 0);
  XPoly f = {rf_const(v, 7), zero, zero, one};  // x^3 + 7
  XPoly g = {rf_const(v, 5)};                   // g = 5
  auto b = tschirnhaus_minpoly(f, g, v, 0);
  // (t - 5)^3 = t^3 - 15t^2 + 75t - 125
  CHECK(b[3] == one);
  CHECK(b[2] == rf_const(v, -15));
  CHECK(b[1] == rf_const(v, 75));
  CHECK(b[0] == rf_const(v, -125));
}

TEST_CASE("operator and resultant routes agree on random instances") {
  VarSet v({"t"});
  RatFunc one = rf_const(v, 1), zero = rf_const(v, 0);
  std::mt19937_64 rng(0xABCD);
  for (int trial = 0; trial < 30; ++trial) {
    unsigned n = 2 + rng() % 4;  // degree 2..5
    XPoly f(n + 1, zero);
    f[n] = one;
    for (unsigned i = 0; i < n; ++i)
      f[i] = rf_const(v, static_cast<long>(rng() % 11) - 5);
    unsigned dg = 1 + rng() % (n - 1);
    XPoly g(dg + 1, zero);
    for (unsigned i = 0; i <= dg; ++i)
      g[i] = rf_const(v, static_cast<long>(rng() % 11) - 5);
    if (g[dg].is_zero()) g[dg] = one;
    // the routes are cross-checked internally; disagreement would throw
    auto b = tschirnhaus_minpoly(f, g, v, 0);
    REQUIRE(b.size() == n + 1);
    CHECK(b[n] == one);
  }
}

TEST_CASE("transcendence degree of explicit function lists") {
  GeneralTrinomial G = general_trinomial(3, 2);
  RatFunc a2 = rf_var(G.vars, G.a_index(2)), a3 = rf_var(G.vars, G.a_index(3));
  RatFunc u = (a2 * a2 * a2) / (a3 * a3);

  CHECK(trdeg({u, u}) == 1);
  CHECK(trdeg({a2, a3}) == 2);
  CHECK(trdeg({a2, a3, a2 * a3}) == 2);
  CHECK(trdeg({rf_const(G.vars, 4)}) == 0);
  CHECK(trdeg({}) == 0);

  // invariant under appending sums and products of listed functions
  CHECK(trdeg({u, u * u, u + rf_const(G.vars, 1)}) == 1);
  CHECK(trdeg({a2, a3, a2 + a3, a2 * a2 * a3}) == 2);

  VarSet other({"z"});
  CHECK_THROWS_AS(trdeg({a2, rf_var(other, 0)}), std::invalid_argument);
}

TEST_CASE("scaling substitution identities for small cases") {
  for (auto [n, m] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 1}, {3, 2}, {4, 2}, {4, 3}, {5, 4}}) {
    CAPTURE(n, m);
    ScalingReport rep = verify_scaling_identity(n, m);
    CHECK(rep.identity_holds);
    CHECK(rep.closed_form_holds);
    CHECK(rep.coeff_trdeg == n - m);
    CHECK(rep.trdeg_matches);

    // support: t^n plus t^{n-j} for j in [m, n]
    std::set<unsigned> want;
    want.insert(n);
    for (unsigned j = m; j <= n; ++j) want.insert(n - j);
    CHECK(rep.t_support == want);
  }
  CHECK_THROWS_AS(verify_scaling_identity(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_scaling_identity(4, 4), std::invalid_argument);
}

TEST_CASE("scaling substitution coefficient values in the cubic case") {
  ScalingReport rep = verify_scaling_identity(3, 2);
  GeneralTrinomial G = general_trinomial(3, 2);
  RatFunc a2 = rf_var(G.vars, G.a_index(2)), a3 = rf_var(G.vars, G.a_index(3));
  RatFunc want = (a2 * a2 * a2) / (a3 * a3);
  REQUIRE(rep.coeffs.size() == 4);
  CHECK(rep.coeffs[1] == want);
  CHECK(rep.coeffs[0] == want);
  CHECK(rep.coeffs[2].is_zero());
}
