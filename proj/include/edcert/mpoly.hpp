#pragma once

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "edcert/cyclotomic.hpp"

namespace edcert {

/// Shared, immutable variable universe.  Every polynomial in a computation
/// carries the same universe; mixing universes is a programming error.
class VarSet {
 public:
  VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit VarSet(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Sparse exact-rational multivariate polynomial.  Keys are exponent vectors
/// over the fixed universe; zero coefficients are never stored.
class MPoly {
 public:
  using Key = std::vector<unsigned>;

  MPoly() = default;
  explicit MPoly(VarSet vars) : vars_(std::move(vars)) {}

  static MPoly constant(const VarSet& vars, const Rat& c) {
    MPoly p(vars);
    if (c != 0) p.terms_[Key(vars.size(), 0)] = c;
    return p;
  }
  static MPoly variable(const VarSet& vars, std::size_t idx, unsigned power = 1) {
    if (idx >= vars.size()) throw std::out_of_range("MPoly::variable");
    MPoly p(vars);
    Key k(vars.size(), 0);
    k[idx] = power;
    p.terms_[std::move(k)] = 1;
    return p;
  }

  const VarSet& vars() const { return vars_; }
  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (unsigned e : terms_.begin()->first)
      if (e != 0) return false;
    return true;
  }
  Rat constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("MPoly: not constant");
    return terms_.begin()->second;
  }
  bool is_monomial() const { return terms_.size() == 1; }

  unsigned degree(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k[var]);
    return d;
  }
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [k, c] : terms_) {
      unsigned s = 0;
      for (unsigned e : k) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  MPoly operator-() const {
    MPoly r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    a.check(b);
    MPoly r(a);
    for (const auto& [k, c] : b.terms_) {
      auto it = r.terms_.find(k);
      if (it == r.terms_.end()) {
        r.terms_[k] = c;
      } else {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check(b);
    MPoly r(a.vars_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        Key k(ka.size());
        for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
          Rat c = ca * cb;
          if (c != 0) r.terms_[std::move(k)] = std::move(c);
        } else {
          it->second += ca * cb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    return r;
  }
  friend MPoly operator*(const MPoly& a, const Rat& s) {
    MPoly r(a.vars_);
    if (s == 0) return r;
    r.terms_ = a.terms_;
    for (auto& [k, c] : r.terms_) c *= s;
    return r;
  }
  friend MPoly operator*(const Rat& s, const MPoly& a) { return a * s; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly pow(unsigned e) const {
    MPoly r = constant(vars_, 1);
    MPoly base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  MPoly derivative(std::size_t var) const {
    MPoly r(vars_);
    for (const auto& [k, c] : terms_) {
      if (k[var] == 0) continue;
      Key nk = k;
      nk[var] -= 1;
      r.terms_[std::move(nk)] = c * Rat(k[var]);
    }
    return r;
  }

  Rat eval(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("MPoly::eval: arity");
    Rat total = 0;
    for (const auto& [k, c] : terms_) {
      Rat term = c;
      for (std::size_t i = 0; i < k.size(); ++i)
        for (unsigned e = 0; e < k[i]; ++e) term *= point[i];
      total += term;
    }
    return total;
  }

  /// Lex-largest term (the map is lex-ordered on exponent vectors).
  std::pair<Key, Rat> leading() const {
    if (terms_.empty()) throw std::logic_error("MPoly::leading: zero polynomial");
    return *terms_.rbegin();
  }

  /// The scalar c with (*this)/c having coprime integer coefficients and a
  /// positive lex-leading coefficient.  Zero polynomial maps to 1.
  Rat primitive_scale() const {
    if (terms_.empty()) return Rat(1);
    Int g = 0, l = 1;
    for (const auto& [k, c] : terms_) {
      g = boost::multiprecision::gcd(g, boost::multiprecision::abs(rat_num(c)));
      l = boost::multiprecision::lcm(l, rat_den(c));
    }
    Rat s(g, l);
    if (terms_.rbegin()->second < 0) s = -s;
    return s;
  }
  MPoly primitive_part() const {
    Rat s = primitive_scale();
    MPoly r(*this);
    for (auto& [k, c] : r.terms_) c /= s;
    return r;
  }

  void insert_term(Key k, Rat c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_[std::move(k)] = std::move(c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print lex-descending so leading terms come first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, c] = *it;
      Rat ac = c < 0 ? Rat(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      bool any_var = false;
      for (unsigned e : k) any_var = any_var || e > 0;
      bool coeff_shown = !any_var || ac != 1;
      if (coeff_shown) os << rat_str(ac);
      bool star = coeff_shown;
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] == 0) continue;
        if (star) os << "*";
        os << vars_.name(i);
        if (k[i] > 1) os << "^" << k[i];
        star = true;
      }
    }
    return os.str();
  }

 private:
  void check(const MPoly& o) const {
    if (!(vars_ == o.vars_)) throw std::invalid_argument("MPoly: mixed variable universes");
  }

  VarSet vars_;
  std::map<Key, Rat> terms_;
};

/// Exact division: A/B when B divides A, empty otherwise.  Division by
/// lex-leading terms; every intermediate step must be divisible.
inline std::optional<MPoly> try_divide(const MPoly& A, const MPoly& B) {
  if (B.is_zero()) throw std::domain_error("try_divide: division by zero");
  MPoly q(A.vars());
  MPoly rem = A;
  auto [lbk, lbc] = B.leading();
  while (!rem.is_zero()) {
    auto [lk, lc] = rem.leading();
    MPoly::Key qk(lk.size());
    for (std::size_t i = 0; i < lk.size(); ++i) {
      if (lk[i] < lbk[i]) return std::nullopt;
      qk[i] = lk[i] - lbk[i];
    }
    MPoly mono(A.vars());
    mono.insert_term(qk, lc / lbc);
    q = q + mono;
    rem = rem - mono * B;
    // progress: the lex-leading term of rem strictly drops each round
  }
  return q;
}

namespace mpdetail {

/// View of p as a univariate polynomial in variable v with MPoly coefficients.
inline std::map<unsigned, MPoly> univariate_view(const MPoly& p, std::size_t v) {
  std::map<unsigned, MPoly> out;
  for (const auto& [k, c] : p.terms()) {
    MPoly::Key nk = k;
    unsigned e = nk[v];
    nk[v] = 0;
    auto it = out.find(e);
    if (it == out.end()) it = out.emplace(e, MPoly(p.vars())).first;
    it->second.insert_term(std::move(nk), c);
  }
  return out;
}

inline MPoly from_view(const VarSet& vars, std::size_t v, const std::map<unsigned, MPoly>& view) {
  MPoly out(vars);
  for (const auto& [e, coeff] : view)
    for (const auto& [k, c] : coeff.terms()) {
      MPoly::Key nk = k;
      nk[v] += e;
      out.insert_term(std::move(nk), c);
    }
  return out;
}

inline int main_variable(const MPoly& a, const MPoly& b) {
  for (int v = static_cast<int>(a.vars().size()) - 1; v >= 0; --v)
    if (a.degree(static_cast<std::size_t>(v)) > 0 || b.degree(static_cast<std::size_t>(v)) > 0)
      return v;
  return -1;
}

}  // namespace mpdetail

MPoly mpoly_gcd(const MPoly& A, const MPoly& B);

namespace mpdetail {

/// gcd of all coefficients of the univariate view (the content w.r.t. v).
inline MPoly content(const MPoly& p, std::size_t v) {
  MPoly g(p.vars());
  for (const auto& [e, coeff] : univariate_view(p, v)) g = mpoly_gcd(g, coeff);
  return g;
}

inline MPoly monomial_gcd(const MPoly& A, const MPoly& B) {
  // exponentwise min over every term of both
  MPoly::Key m;
  bool first = true;
  auto fold = [&](const MPoly& p) {
    for (const auto& [k, c] : p.terms()) {
      if (first) {
        m = k;
        first = false;
      } else {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], k[i]);
      }
    }
  };
  fold(A);
  fold(B);
  MPoly g(A.vars());
  g.insert_term(std::move(m), Rat(1));
  return g;
}

}  // namespace mpdetail

/// Multivariate gcd over Q, primitive with positive leading coefficient.
/// Primitive pseudo-remainder sequence with content recursion; single-monomial
/// inputs short-circuit to exponentwise minima.
inline MPoly mpoly_gcd(const MPoly& A, const MPoly& B) {
  if (A.is_zero()) return B.primitive_part();
  if (B.is_zero()) return A.primitive_part();
  if (A.is_monomial() || B.is_monomial()) return mpdetail::monomial_gcd(A, B);
  int vi = mpdetail::main_variable(A, B);
  if (vi < 0) return MPoly::constant(A.vars(), 1);  // both nonzero constants
  std::size_t v = static_cast<std::size_t>(vi);

  MPoly ca = mpdetail::content(A, v), cb = mpdetail::content(B, v);
  MPoly ga = *try_divide(A, ca), gb = *try_divide(B, cb);
  MPoly cont = mpoly_gcd(ca, cb);

  // primitive PRS on ga, gb as univariates in v
  auto deg = [&](const MPoly& p) { return p.degree(v); };
  MPoly P = ga, Q = gb;
  if (deg(P) < deg(Q)) std::swap(P, Q);
  while (!Q.is_zero()) {
    // pseudo-remainder of P by Q in v
    auto qv = mpdetail::univariate_view(Q, v);
    unsigned dq = qv.rbegin()->first;
    MPoly lq = qv.rbegin()->second;
    MPoly R = P;
    while (!R.is_zero() && R.degree(v) >= dq) {
      auto rv = mpdetail::univariate_view(R, v);
      unsigned dr = rv.rbegin()->first;
      MPoly lr = rv.rbegin()->second;
      MPoly shift = MPoly::variable(R.vars(), v, dr - dq);
      R = R * lq - Q * (lr * shift);
      if (!R.is_zero() && R.degree(v) >= dr)
        throw std::logic_error("mpoly_gcd: pseudo-division failed to reduce degree");
    }
    P = Q;
    Q = R;
    if (!Q.is_zero()) Q = try_divide(Q, mpdetail::content(Q, v))->primitive_part();
  }
  MPoly prim = *try_divide(P, mpdetail::content(P, v));
  return (cont * prim).primitive_part();
}

/// Canonical fraction of multivariate polynomials: gcd-reduced, denominator
/// primitive with positive leading coefficient.  Equality is structural.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(MPoly num)
      : num_(std::move(num)), den_(MPoly::constant(num_.vars(), 1)) {}
  RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
  }
  static RatFunc constant(const VarSet& vars, const Rat& c) {
    return RatFunc(MPoly::constant(vars, c));
  }
  static RatFunc variable(const VarSet& vars, std::size_t idx) {
    return RatFunc(MPoly::variable(vars, idx));
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const VarSet& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RatFunc operator*(const RatFunc& a, const Rat& s) {
    return RatFunc(a.num_ * s, a.den_);
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc derivative(std::size_t var) const {
    return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
  }

  /// Empty when the denominator vanishes at the point.
  std::optional<Rat> eval(const std::vector<Rat>& point) const {
    Rat d = den_.eval(point);
    if (d == 0) return std::nullopt;
    return num_.eval(point) / d;
  }

  std::string str() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = MPoly::constant(num_.vars(), 1);
      return;
    }
    MPoly g = mpoly_gcd(num_, den_);
    if (!(g.is_constant() && g.constant_value() == 1)) {
      num_ = *try_divide(num_, g);
      den_ = *try_divide(den_, g);
    }
    Rat s = den_.primitive_scale();
    if (s != 1) {
      num_ = num_ * (Rat(1) / s);
      den_ = den_ * (Rat(1) / s);
    }
  }

  MPoly num_;
  MPoly den_;
};

/// Characteristic polynomial of a square matrix over a commutative Q-algebra
/// via the trace recurrence: returns the coefficient list c so that
/// charpoly(t) = t^n + c[0] t^{n-1} + ... + c[n-1].  T needs +, *, unary -,
/// and scalar multiplication by Rat.
template <typename T>
std::vector<T> charpoly_coeffs(const std::vector<std::vector<T>>& M, const T& zero, const T& one) {
  const std::size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) throw std::invalid_argument("charpoly_coeffs: not square");
  std::vector<std::vector<T>> Mk = M;
  std::vector<T> c;
  c.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    T tr = zero;
    for (std::size_t i = 0; i < n; ++i) tr = tr + Mk[i][i];
    T ck = (-tr) * Rat(1, static_cast<long>(k));
    c.push_back(ck);
    if (k == n) break;
    // Mk+1 = M (Mk + ck I)
    std::vector<std::vector<T>> S = Mk;
    for (std::size_t i = 0; i < n; ++i) S[i][i] = S[i][i] + ck;
    std::vector<std::vector<T>> next(n, std::vector<T>(n, zero));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        T acc = zero;
        for (std::size_t l = 0; l < n; ++l) acc = acc + M[i][l] * S[l][j];
        next[i][j] = acc;
      }
    Mk = std::move(next);
  }
  (void)one;
  return c;
}

/// Determinant of a square MPoly matrix by Bareiss fraction-free elimination;
/// all interior divisions are exact.
inline MPoly mpoly_det(std::vector<std::vector<MPoly>> M, const VarSet& vars) {
  const std::size_t n = M.size();
  if (n == 0) return MPoly::constant(vars, 1);
  int sign = 1;
  MPoly prev = MPoly::constant(vars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && M[p][k].is_zero()) ++p;
      if (p == n) return MPoly(vars);  // singular
      std::swap(M[k], M[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        auto q = try_divide(t, prev);
        if (!q) throw std::logic_error("mpoly_det: non-exact Bareiss division");
        M[i][j] = std::move(*q);
      }
    prev = M[k][k];
  }
  MPoly d = M[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

/// Sylvester resultant Res_x(f, g) for coefficient lists over the shared
/// universe; f.size() = deg f + 1, index = power of x, f.back() is leading.
inline MPoly sylvester_resultant(const std::vector<MPoly>& f, const std::vector<MPoly>& g,
                                 const VarSet& vars) {
  if (f.size() < 2 || g.size() < 2)
    throw std::invalid_argument("sylvester_resultant: both degrees must be >= 1");
  const std::size_t df = f.size() - 1, dg = g.size() - 1;
  const std::size_t n = df + dg;
  std::vector<std::vector<MPoly>> S(n, std::vector<MPoly>(n, MPoly(vars)));
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t j = 0; j <= df; ++j) S[r][r + j] = f[df - j];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t j = 0; j <= dg; ++j) S[dg + r][r + j] = g[dg - j];
  return mpoly_det(std::move(S), vars);
}

// Field helpers so exact Gaussian elimination can be written once for both
// rational and cyclotomic entries.
inline bool field_is_zero(const Rat& r) { return r == 0; }
inline bool field_is_zero(const CycNum& c) { return c.is_zero(); }
inline Rat field_div(const Rat& a, const Rat& b) { return a / b; }
inline CycNum field_div(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

/// Exact rank by Gaussian elimination over a field (Rat or CycNum).
template <typename T>
std::size_t exact_rank(std::vector<std::vector<T>> M) {
  if (M.empty()) return 0;
  const std::size_t rows = M.size(), cols = M[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && field_is_zero(M[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(M[rank], M[piv]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (field_is_zero(M[r][c])) continue;
      T factor = field_div(M[r][c], M[rank][c]);
      for (std::size_t j = c; j < cols; ++j) M[r][j] = M[r][j] - factor * M[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace edcert
