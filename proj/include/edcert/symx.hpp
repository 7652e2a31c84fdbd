#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <random>
#include <sstream>

#include "edcert/mpoly.hpp"

namespace edcert {

template <typename T>
std::vector<T> power_sums(const std::vector<T>& x, std::size_t upto) {
  std::vector<T> p;
  std::vector<T> cur = x;
  for (std::size_t j = 1; j <= upto; ++j) {
    T s{};
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (j > 1) cur[i] = cur[i] * x[i];
      s = s + cur[i];
    }
    p.push_back(s);
  }
  return p;
}

/// e_1 .. e_n by expanding prod (1 + x_i u) one factor at a time.  The unit
/// of the coefficient ring is passed in because CycNum carries its order.
template <typename T>
std::vector<T> elem_sym_with_one(const std::vector<T>& x, const T& one) {
  std::vector<T> e(x.size() + 1, one - one);
  e[0] = one;
  std::size_t used = 0;
  for (const T& xi : x) {
    ++used;
    for (std::size_t j = used; j >= 1; --j) e[j] = e[j] + xi * e[j - 1];
  }
  return std::vector<T>(e.begin() + 1, e.end());
}

inline std::vector<Rat> elem_sym(const std::vector<Rat>& x) {
  return elem_sym_with_one(x, Rat(1));
}

/// Newton recurrence, s-prefix to p-prefix:
/// p_k = sum_{i<k} (-1)^{i-1} s_i p_{k-i} + (-1)^{k-1} k s_k.
inline std::vector<Rat> newton_s_to_p(const std::vector<Rat>& s) {
  std::vector<Rat> p;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    Rat v = (k % 2 == 1 ? Rat(1) : Rat(-1)) * Rat(static_cast<long>(k)) * s[k - 1];
    for (std::size_t i = 1; i < k; ++i)
      v += (i % 2 == 1 ? Rat(1) : Rat(-1)) * s[i - 1] * p[k - i - 1];
    p.push_back(v);
  }
  return p;
}

/// Inverse direction: s_k = (1/k) sum_{i=1}^{k} (-1)^{i-1} s_{k-i} p_i.
inline std::vector<Rat> newton_p_to_s(const std::vector<Rat>& p) {
  std::vector<Rat> s;
  for (std::size_t k = 1; k <= p.size(); ++k) {
    Rat v(0);
    for (std::size_t i = 1; i <= k; ++i) {
      Rat prev = (i == k) ? Rat(1) : s[k - i - 1];
      v += (i % 2 == 1 ? Rat(1) : Rat(-1)) * prev * p[i - 1];
    }
    s.push_back(v / Rat(static_cast<long>(k)));
  }
  return s;
}

template <typename T>
std::size_t distinct_count(const std::vector<T>& x) {
  std::vector<const T*> reps;
  for (const T& v : x) {
    bool found = false;
    for (const T* r : reps) found = found || (*r == v);
    if (!found) reps.push_back(&v);
  }
  return reps.size();
}

/// Rank of the (m-1) x n matrix with rows j * x_i^{j-1}, exact arithmetic.
template <typename T>
std::size_t jacobian_rank_exact(const std::vector<T>& x, unsigned m, const T& one) {
  if (m < 2) return 0;
  std::vector<std::vector<T>> rows;
  std::vector<T> pw(x.size(), one);  // x_i^{j-1}
  for (unsigned j = 1; j < m; ++j) {
    std::vector<T> row;
    for (std::size_t i = 0; i < x.size(); ++i) {
      T jc = one - one;
      for (unsigned rep = 0; rep < j; ++rep) jc = jc + one;
      row.push_back(jc * pw[i]);
    }
    rows.push_back(std::move(row));
    for (std::size_t i = 0; i < x.size(); ++i) pw[i] = pw[i] * x[i];
  }
  return exact_rank(std::move(rows));
}

/// Numeric rank via singular values, relative threshold 1e-6.
inline std::size_t jacobian_rank_numeric(const std::vector<std::complex<double>>& x, unsigned m,
                                         double tau = 1e-6) {
  if (m < 2 || x.empty()) return 0;
  Eigen::MatrixXcd J(m - 1, x.size());
  for (unsigned j = 1; j < m; ++j)
    for (std::size_t i = 0; i < x.size(); ++i)
      J(j - 1, i) = double(j) * std::pow(x[i], int(j) - 1);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(J);
  double top = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tau * top) ++r;
  return r;
}

/// Witness of the doubled-shape fixed point: coordinates
/// (a_1,a_1,...,a_{n-m},a_{n-m},a_{n-m+1},...,a_m) with p_1..p_{m-1} = 0.
struct SymWitness {
  unsigned n = 0, m = 0;
  std::string shape;
  bool exact = false;
  std::vector<CycNum> exact_coords;           // filled when exact
  std::vector<std::complex<double>> coords;   // always filled
  double residual = 0.0;                      // max |p_j|, j < m, recomputed
  std::size_t jacobian_rank = 0;
  std::uint64_t seed = 0;
  unsigned stabilizer_rank = 0;               // the (Z/2)^{n-m} of pair swaps
};

namespace symdetail {

inline std::string shape_string(unsigned n, unsigned m) {
  std::ostringstream os;
  os << "(";
  unsigned k = n - m;
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned rep = 0; rep < (i <= k ? 2u : 1u); ++rep) {
      if (os.str().size() > 1) os << ",";
      os << "a" << i;
    }
  }
  os << ")";
  return os.str();
}

inline std::vector<std::complex<double>> assemble(const std::vector<std::complex<double>>& alpha,
                                                  unsigned n, unsigned m) {
  std::vector<std::complex<double>> x;
  unsigned k = n - m;
  for (unsigned i = 0; i < m; ++i) {
    x.push_back(alpha[i]);
    if (i < k) x.push_back(alpha[i]);
  }
  return x;
}

inline std::vector<CycNum> assemble_exact(const std::vector<CycNum>& alpha, unsigned n,
                                          unsigned m) {
  std::vector<CycNum> x;
  unsigned k = n - m;
  for (unsigned i = 0; i < m; ++i) {
    x.push_back(alpha[i]);
    if (i < k) x.push_back(alpha[i]);
  }
  return x;
}

inline double residual_of(const std::vector<std::complex<double>>& x, unsigned m) {
  double worst = 0.0;
  auto p = power_sums(x, m - 1);
  for (const auto& v : p) worst = std::max(worst, std::abs(v));
  return worst;
}

}  // namespace symdetail

/// Exact or, beyond quadratics, Newton-iterated witness.  Empty only when the
/// numeric solver exhausts its retry budget without a verified point.
inline std::optional<SymWitness> find_symmetric_witness(unsigned n, unsigned m,
                                                        std::uint64_t seed = 0x5EEDF00D) {
  if (m < 2 || m >= n || 2 * m < n)
    throw std::invalid_argument("find_symmetric_witness: need n/2 <= m <= n-1, m >= 2");
  const unsigned k = n - m;  // doubled variables
  std::vector<Rat> mult;     // multiplicities c_1..c_m
  for (unsigned i = 1; i <= m; ++i) mult.emplace_back(i <= k ? 2 : 1);

  SymWitness w;
  w.n = n;
  w.m = m;
  w.shape = symdetail::shape_string(n, m);
  w.stabilizer_rank = k;

  if (m == 2) {
    // c_1 alpha + c_2 = 0
    Rat a = -mult[1] / mult[0];
    std::vector<CycNum> alpha = {CycNum(a), CycNum(Rat(1))};
    w.exact = true;
    w.exact_coords = symdetail::assemble_exact(alpha, n, m);
    for (const auto& c : w.exact_coords) w.coords.push_back(c.approx());
    auto p = power_sums(w.exact_coords, m - 1);
    for (const auto& v : p)
      if (!v.is_zero()) throw std::logic_error("find_symmetric_witness: exact residual nonzero");
    w.residual = symdetail::residual_of(w.coords, m);
    w.jacobian_rank = jacobian_rank_exact(w.exact_coords, m, CycNum(Rat(1)));
    return w;
  }

  if (m == 3) {
    // alpha_3 = 1; alpha_1 eliminated from p_1; quadratic in alpha_2:
    // c_2(c_1+c_2) a^2 + 2 c_2 c_3 a + c_3(c_1+c_3) = 0.
    Rat c1 = mult[0], c2 = mult[1], c3 = mult[2];
    Rat A = c2 * (c1 + c2), B = 2 * c2 * c3, C = c3 * (c1 + c3);
    Rat disc = B * B - 4 * A * C;
    CycNum sq = cyclotomic_sqrt(disc);
    CycNum a2 = (CycNum(-B) + sq) * CycNum(Rat(1) / (2 * A));
    CycNum a1 = (CycNum(c2) * a2 + CycNum(c3)) * CycNum(Rat(-1) / c1);
    std::vector<CycNum> alpha = {a1, a2, CycNum(Rat(1))};
    w.exact = true;
    w.exact_coords = symdetail::assemble_exact(alpha, n, m);
    for (const auto& c : w.exact_coords) w.coords.push_back(c.approx());
    auto p = power_sums(w.exact_coords, m - 1);
    for (const auto& v : p)
      if (!v.is_zero()) throw std::logic_error("find_symmetric_witness: exact residual nonzero");
    w.residual = symdetail::residual_of(w.coords, m);
    w.jacobian_rank = jacobian_rank_exact(w.exact_coords, m, CycNum(Rat(1)));
    return w;
  }

  // Newton iteration on the square system p_1..p_{m-1} with one variable
  // pinned to 1; the pinned index rotates across retries.
  w.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  using C = std::complex<double>;
  std::vector<double> cmul;
  for (const Rat& c : mult) cmul.push_back(static_cast<double>(rat_num(c)));

  for (unsigned retry = 0; retry < 50; ++retry) {
    const unsigned fix = m - 1 - ((retry / 10) % m);
    std::vector<C> alpha(m);
    for (unsigned i = 0; i < m; ++i) alpha[i] = C(U(rng), U(rng));
    alpha[fix] = C(1.0, 0.0);
    std::vector<unsigned> free_idx;
    for (unsigned i = 0; i < m; ++i)
      if (i != fix) free_idx.push_back(i);

    bool converged = false;
    for (unsigned it = 0; it < 200; ++it) {
      Eigen::VectorXcd F(m - 1);
      auto x = symdetail::assemble(alpha, n, m);
      auto p = power_sums(x, m - 1);
      for (unsigned j = 0; j < m - 1; ++j) F(j) = p[j];
      Eigen::MatrixXcd J(m - 1, m - 1);
      for (unsigned j = 1; j < m; ++j)
        for (std::size_t col = 0; col < free_idx.size(); ++col) {
          unsigned i = free_idx[col];
          J(j - 1, col) = double(j) * cmul[i] * std::pow(alpha[i], int(j) - 1);
        }
      Eigen::VectorXcd delta = J.partialPivLu().solve(-F);
      double step = delta.lpNorm<Eigen::Infinity>();
      if (!std::isfinite(step)) break;
      // trust region: full Newton steps overshoot badly for the deeper
      // shapes and blow up; capped steps still converge quadratically once
      // close, and the convergence test uses the undamped step size
      double scale = step > 0.5 ? 0.5 / step : 1.0;
      for (std::size_t col = 0; col < free_idx.size(); ++col)
        alpha[free_idx[col]] += scale * delta(col);
      if (step < 1e-12) {
        converged = true;
        break;
      }
    }
    if (!converged) continue;

    auto x = symdetail::assemble(alpha, n, m);
    // normalize to unit sup-norm; the variety is homogeneous
    double sup = 0.0;
    for (const auto& v : x) sup = std::max(sup, std::abs(v));
    if (!std::isfinite(sup) || sup < 1e-8) continue;  // diverged or collapsed
    for (auto& v : x) v /= sup;
    double res = symdetail::residual_of(x, m);
    if (!(res <= 1e-9)) continue;  // written to also reject NaN
    std::size_t rank = jacobian_rank_numeric(x, m);
    if (rank != m - 1) continue;
    w.coords = x;
    w.residual = res;
    w.jacobian_rank = rank;
    return w;
  }
  return std::nullopt;
}

/// The (n-1)! points (1 : z^{s(1)} : ... : z^{s(n-1)}) over distinct n-th
/// roots of unity; every power sum p_1..p_{n-1} vanishes exactly.
inline std::vector<std::vector<CycNum>> xnn_lines(unsigned n) {
  if (n < 2 || n > 8) throw std::invalid_argument("xnn_lines: 2 <= n <= 8");
  std::vector<unsigned> perm;
  for (unsigned i = 1; i < n; ++i) perm.push_back(i);
  std::vector<std::vector<CycNum>> out;
  do {
    std::vector<CycNum> pt;
    pt.push_back(CycNum(Rat(1)));
    for (unsigned e : perm) pt.push_back(CycNum::root_of_unity(n, e));
    auto p = power_sums(pt, n - 1);
    for (const auto& v : p)
      if (!v.is_zero()) throw std::logic_error("xnn_lines: power sum failed to vanish");
    if (distinct_count(pt) != n) throw std::logic_error("xnn_lines: repeated coordinate");
    out.push_back(std::move(pt));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace edcert
