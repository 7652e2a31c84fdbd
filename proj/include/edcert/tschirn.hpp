#pragma once

#include <random>
#include <set>

#include "edcert/mpoly.hpp"

namespace edcert {

/// Polynomial in x over a rational-function field; index = power of x.
using XPoly = std::vector<RatFunc>;

inline std::size_t xpoly_degree(const XPoly& p) {
  std::size_t d = p.size();
  while (d > 0 && p[d - 1].is_zero()) --d;
  if (d == 0) throw std::invalid_argument("xpoly_degree: zero polynomial");
  return d - 1;
}

/// x^n + a_m x^{n-m} + ... + a_n together with its variable universe.
/// The universe carries one extra variable t for minimal polynomials.
struct GeneralTrinomial {
  unsigned n = 0, m = 0;
  VarSet vars;               // a_m ... a_n, then t
  std::size_t t_index = 0;   // position of t in vars
  XPoly f;                   // coefficients in x

  std::size_t a_index(unsigned j) const {
    if (j < m || j > n) throw std::out_of_range("GeneralTrinomial::a_index");
    return j - m;
  }
};

inline GeneralTrinomial general_trinomial(unsigned n, unsigned m) {
  if (m < 1 || m >= n) throw std::invalid_argument("general_trinomial: need 1 <= m <= n-1");
  GeneralTrinomial g;
  g.n = n;
  g.m = m;
  std::vector<std::string> names;
  for (unsigned j = m; j <= n; ++j) names.push_back("a" + std::to_string(j));
  names.push_back("t");
  g.t_index = names.size() - 1;
  g.vars = VarSet(std::move(names));
  g.f.assign(n + 1, RatFunc::constant(g.vars, 0));
  g.f[n] = RatFunc::constant(g.vars, 1);
  for (unsigned j = m; j <= n; ++j) g.f[n - j] = RatFunc::variable(g.vars, g.a_index(j));
  return g;
}

namespace tsdetail {

/// Reduce p mod monic f (both in x), in place.
inline void reduce_mod(XPoly& p, const XPoly& f) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = p.size(); d-- > f.size() - 1;) {
    if (d < n || p[d].is_zero()) continue;
    RatFunc c = p[d];
    p[d] = RatFunc::constant(c.vars(), 0);
    for (std::size_t j = 0; j < n; ++j)
      p[d - n + j] = p[d - n + j] - c * f[j];
  }
  p.resize(n, RatFunc::constant(f[0].vars(), 0));
}

/// Resultant oracle: Res_x(f, t - g), both sides cleared of denominators
/// (a t-free unit), returned as the monic-normalized coefficient list in t.
inline std::vector<RatFunc> resultant_minpoly(const XPoly& f, const XPoly& g, const VarSet& vars,
                                              std::size_t t_index) {
  const std::size_t n = f.size() - 1;
  // clear denominators of f
  MPoly Df = MPoly::constant(vars, 1);
  for (const auto& c : f) Df = Df * c.den();
  std::vector<MPoly> F;
  for (const auto& c : f) F.push_back(c.num() * *try_divide(Df, c.den()));
  // h = t - g, cleared: Dg*t - Dg*g
  MPoly Dg = MPoly::constant(vars, 1);
  for (const auto& c : g) Dg = Dg * c.den();
  std::size_t dg = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!g[i].is_zero()) dg = i;
  std::vector<MPoly> H(std::max<std::size_t>(dg + 1, 1), MPoly(vars));
  for (std::size_t i = 0; i <= dg; ++i)
    if (i < g.size() && !g[i].is_zero()) H[i] = -(g[i].num() * *try_divide(Dg, g[i].den()));
  H[0] = H[0] + Dg * MPoly::variable(vars, t_index);

  MPoly R;
  if (dg == 0) {
    // constant g: Res(f, c) = lc(f)^0 * c^{deg f} for monic f
    R = H[0].pow(static_cast<unsigned>(n));
  } else {
    R = sylvester_resultant(F, H, vars);
  }

  auto view = mpdetail::univariate_view(R, t_index);
  if (view.empty() || view.rbegin()->first != n)
    throw std::logic_error("resultant_minpoly: wrong degree in t");
  MPoly lead = view.rbegin()->second;
  std::vector<RatFunc> out(n + 1, RatFunc::constant(vars, 0));
  for (const auto& [e, coeff] : view) out[e] = RatFunc(coeff, lead);
  return out;
}

}  // namespace tsdetail

/// Minimal polynomial of z = g(x) on the quotient by monic f: characteristic
/// polynomial of the multiplication-by-g operator, always cross-checked
/// against the resultant Res_x(f, t - g).  Returns coefficients by power of
/// t; the result is monic of degree n.
inline std::vector<RatFunc> tschirnhaus_minpoly(const XPoly& f, const XPoly& g,
                                                const VarSet& vars, std::size_t t_index) {
  if (f.size() < 2) throw std::invalid_argument("tschirnhaus_minpoly: deg f must be >= 1");
  const std::size_t n = f.size() - 1;
  RatFunc one = RatFunc::constant(vars, 1), zero = RatFunc::constant(vars, 0);
  if (!(f[n] == one)) throw std::invalid_argument("tschirnhaus_minpoly: f must be monic");
  if (g.size() >= f.size() && xpoly_degree(g) >= n)
    throw std::invalid_argument("tschirnhaus_minpoly: deg g must be < deg f");

  // columns: g * x^j mod f
  std::vector<std::vector<RatFunc>> M(n, std::vector<RatFunc>(n, zero));
  for (std::size_t j = 0; j < n; ++j) {
    XPoly col(g.size() + j, zero);
    for (std::size_t i = 0; i < g.size(); ++i) col[i + j] = g[i];
    tsdetail::reduce_mod(col, f);
    for (std::size_t i = 0; i < n; ++i) M[i][j] = col[i];
  }
  std::vector<RatFunc> c = charpoly_coeffs(M, zero, one);
  std::vector<RatFunc> out(n + 1, zero);
  out[n] = one;
  for (std::size_t k = 0; k < n; ++k) out[n - 1 - k] = c[k];

  std::vector<RatFunc> oracle = tsdetail::resultant_minpoly(f, g, vars, t_index);
  for (std::size_t i = 0; i <= n; ++i)
    if (!(out[i] == oracle[i]))
      throw std::logic_error("tschirnhaus_minpoly: operator and resultant paths disagree");
  return out;
}

/// Transcendence-degree estimate: generic rank of the Jacobian of the
/// function list, maximized over `points` random integer evaluations that
/// avoid every denominator.
inline std::size_t trdeg(const std::vector<RatFunc>& funcs, std::uint64_t seed = 0x7D3C0DE,
                         unsigned points = 3) {
  if (funcs.empty()) return 0;
  const VarSet& vars = funcs.front().vars();
  const std::size_t nv = vars.size();
  std::vector<std::vector<RatFunc>> jac;  // rows: funcs, cols: vars
  for (const auto& fn : funcs) {
    if (!(fn.vars() == vars)) throw std::invalid_argument("trdeg: mixed universes");
    std::vector<RatFunc> row;
    for (std::size_t v = 0; v < nv; ++v) row.push_back(fn.derivative(v));
    jac.push_back(std::move(row));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> draw(-1000000, 1000000);
  std::size_t best = 0;
  for (unsigned pt = 0; pt < points; ++pt) {
    std::vector<std::vector<Rat>> num_jac;
    bool ok = false;
    for (unsigned attempt = 0; attempt < 100 && !ok; ++attempt) {
      std::vector<Rat> x;
      for (std::size_t v = 0; v < nv; ++v) x.emplace_back(draw(rng));
      num_jac.assign(funcs.size(), {});
      ok = true;
      for (std::size_t i = 0; i < jac.size() && ok; ++i)
        for (std::size_t v = 0; v < nv && ok; ++v) {
          auto val = jac[i][v].eval(x);
          if (!val) {
            ok = false;
            break;
          }
          num_jac[i].push_back(*val);
        }
    }
    if (!ok)
      throw std::runtime_error("trdeg: no evaluation point avoided the denominators");
    best = std::max(best, exact_rank(num_jac));
  }
  return best;
}

/// Result of pushing z = (a_{n-1}/a_n) x through the general trinomial.
struct ScalingReport {
  unsigned n = 0, m = 0;
  bool identity_holds = false;       // b_{n-1} = b_n = a_{n-1}^n / a_n^{n-1}
  bool closed_form_holds = false;    // every b_j = a_j a_{n-1}^j / a_n^j
  std::set<unsigned> t_support;      // powers of t with nonzero coefficient
  std::vector<RatFunc> coeffs;       // by power of t
  std::size_t coeff_trdeg = 0;
  bool trdeg_matches = false;        // coeff_trdeg == n - m
};

/// Verifies the coefficient identities of the scaling substitution exactly,
/// and that the surviving coefficients generate a subfield of transcendence
/// degree n - m.
inline ScalingReport verify_scaling_identity(unsigned n, unsigned m,
                                             std::uint64_t seed = 0x7D3C0DE) {
  if (2 * m < n || m >= n)
    throw std::invalid_argument("verify_scaling_identity: need n/2 <= m <= n-1");
  GeneralTrinomial G = general_trinomial(n, m);
  RatFunc an1 = RatFunc::variable(G.vars, G.a_index(n - 1));
  RatFunc an = RatFunc::variable(G.vars, G.a_index(n));
  XPoly g = {RatFunc::constant(G.vars, 0), an1 / an};
  std::vector<RatFunc> b = tschirnhaus_minpoly(G.f, g, G.vars, G.t_index);

  ScalingReport rep;
  rep.n = n;
  rep.m = m;
  rep.coeffs = b;
  for (unsigned e = 0; e <= n; ++e)
    if (!b[e].is_zero()) rep.t_support.insert(e);

  auto expected_bj = [&](unsigned j) {
    // a_j a_{n-1}^j / a_n^j  (for j = n this collapses to a_{n-1}^n / a_n^{n-1})
    MPoly num = MPoly::variable(G.vars, G.a_index(n - 1)).pow(j);
    if (j < n) num = num * MPoly::variable(G.vars, G.a_index(j));
    MPoly den = MPoly::variable(G.vars, G.a_index(n)).pow(j == n ? j - 1 : j);
    return RatFunc(num, den);
  };

  rep.identity_holds = (b[0] == b[1]) && (b[0] == expected_bj(n));
  rep.closed_form_holds = true;
  for (unsigned e = 0; e < n; ++e) {
    unsigned j = n - e;  // coefficient of t^e is b_j
    RatFunc want = (j >= m) ? expected_bj(j) : RatFunc::constant(G.vars, 0);
    rep.closed_form_holds = rep.closed_form_holds && (b[e] == want);
  }

  std::vector<RatFunc> blist;
  for (unsigned j = m; j <= n; ++j) blist.push_back(b[n - j]);
  rep.coeff_trdeg = trdeg(blist, seed);
  rep.trdeg_matches = (rep.coeff_trdeg == n - m);
  return rep;
}

}  // namespace edcert
