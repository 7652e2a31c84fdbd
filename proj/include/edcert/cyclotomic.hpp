#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_E).
//
// A value of order E is stored as a rational coefficient vector of length
// phi(E) representing a residue mod Phi_E (the E-th cyclotomic polynomial,
// irreducible over Q, so nonzero residues are invertible).  Mixed-order
// arithmetic promotes both operands into Q(zeta_lcm) first; equality is
// decided in the common field.  Sums of complete root packets reduce to 0
// automatically because reduction mod Phi_E is a normal form.

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

#include "rational.hpp"

namespace edcert {

namespace upoly {

// Dense univariate polynomials over Rat, little-endian (coeff of x^k at [k]).

inline void trim(std::vector<Rat>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const std::vector<Rat>& p) { return static_cast<int>(p.size()) - 1; }

inline std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

/// Quotient of a by b. Requires exact divisibility when `exact` is set
/// (throws std::logic_error otherwise); remainder is left in a.
inline std::vector<Rat> divmod(std::vector<Rat>& a, const std::vector<Rat>& b, bool exact = false) {
  trim(a);
  if (b.empty() || b.back() == 0) throw std::invalid_argument("upoly::divmod: zero divisor");
  std::vector<Rat> q;
  if (degree(a) >= degree(b)) q.assign(a.size() - b.size() + 1, Rat(0));
  while (degree(a) >= degree(b)) {
    Rat c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  if (exact && !a.empty()) throw std::logic_error("upoly::divmod: inexact division");
  return q;
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
inline std::array<std::vector<Rat>, 3> ext_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  std::vector<Rat> u0{Rat(1)}, v0, u1, v1{Rat(1)};
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::vector<Rat> r = a;
    std::vector<Rat> q = divmod(r, b);
    // (a, b) <- (b, a - q b), carrying Bezout rows along.
    auto step = [&q](std::vector<Rat>& x0, std::vector<Rat>& x1) {
      std::vector<Rat> t = mul(q, x1);
      if (t.size() < x0.size()) t.resize(x0.size(), Rat(0));
      for (std::size_t i = 0; i < x0.size(); ++i) t[i] = x0[i] - t[i];
      for (std::size_t i = x0.size(); i < t.size(); ++i) t[i] = -t[i];
      trim(t);
      x0 = std::move(x1);
      x1 = std::move(t);
    };
    step(u0, u1);
    step(v0, v1);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : u0) c /= lead;
    for (auto& c : v0) c /= lead;
  }
  return {std::move(a), std::move(u0), std::move(v0)};
}

}  // namespace upoly

/// Shared cache of cyclotomic polynomials and reduction rows, keyed by order.
/// Safe for concurrent use; insertion is serialized by a recursive mutex.
class CyclotomicTable {
 public:
  struct Entry {
    unsigned order = 1;
    unsigned degree = 1;          // phi(order)
    std::vector<Rat> phi;         // monic, integer coefficients, length degree+1
    // Sparse normal forms of x^k mod Phi for k in [degree, 2*degree-2]:
    // rows[k - degree] lists (exponent, coefficient) pairs.
    std::vector<std::vector<std::pair<unsigned, Rat>>> rows;
  };

  static constexpr unsigned kMaxOrder = 1u << 20;

  static const Entry& get(unsigned order) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
    if (order > kMaxOrder) throw std::length_error("cyclotomic order exceeds supported scale");
    std::lock_guard<std::recursive_mutex> lock(mutex_());
    auto& cache = cache_();
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;
    auto entry = std::make_unique<Entry>(compute(order));
    const Entry& ref = *entry;
    cache.emplace(order, std::move(entry));
    return ref;
  }

 private:
  static std::recursive_mutex& mutex_() {
    static std::recursive_mutex m;
    return m;
  }
  static std::map<unsigned, std::unique_ptr<const Entry>>& cache_() {
    static std::map<unsigned, std::unique_ptr<const Entry>> c;
    return c;
  }

  static Entry compute(unsigned order) {
    Entry e;
    e.order = order;
    // x^order - 1 divided by the cyclotomic polynomials of all proper divisors.
    std::vector<Rat> num(order + 1, Rat(0));
    num[0] = -1;
    num[order] = 1;
    for (std::uint64_t d : divisors(order)) {
      if (d == order) continue;
      num = [&] {
        std::vector<Rat> r = std::move(num);
        std::vector<Rat> q = upoly::divmod(r, get(static_cast<unsigned>(d)).phi, true);
        return q;
      }();
    }
    e.phi = std::move(num);
    e.degree = static_cast<unsigned>(upoly::degree(e.phi));
    if (e.degree != totient(order))
      throw std::logic_error("cyclotomic polynomial degree mismatch");
    // Reduction rows: x^degree = -(low part of phi), then shift repeatedly.
    std::vector<Rat> cur(e.degree, Rat(0));
    for (unsigned i = 0; i < e.degree; ++i) cur[i] = -e.phi[i];
    for (unsigned k = e.degree; e.degree >= 2 && k <= 2 * e.degree - 2; ++k) {
      std::vector<std::pair<unsigned, Rat>> sparse;
      for (unsigned i = 0; i < e.degree; ++i)
        if (cur[i] != 0) sparse.emplace_back(i, cur[i]);
      e.rows.push_back(std::move(sparse));
      // cur <- x * cur mod phi
      Rat top = cur.back();
      for (unsigned i = e.degree - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (unsigned i = 0; i < e.degree; ++i) cur[i] -= top * e.phi[i];
    }
    if (e.degree == 1) {
      std::vector<std::pair<unsigned, Rat>> sparse;
      if (-e.phi[0] != 0) sparse.emplace_back(0u, -e.phi[0]);
      e.rows.push_back(std::move(sparse));
    }
    return e;
  }
};

/// One element of Q(zeta_E) in normal form mod Phi_E.
class CycNum {
 public:
  CycNum() : order_(1), c_(1, Rat(0)) {}
  explicit CycNum(const Rat& r) : order_(1), c_(1, r) {}
  explicit CycNum(long long n) : order_(1), c_(1, Rat(n)) {}

  static CycNum zero(unsigned order) { return CycNum(order, std::vector<Rat>(CyclotomicTable::get(order).degree, Rat(0))); }

  static CycNum one(unsigned order) {
    CycNum z = zero(order);
    z.c_[0] = 1;
    return z;
  }

  /// zeta_E^k (k taken mod E, negatives allowed).
  static CycNum root_of_unity(unsigned order, long long k) {
    const auto& ent = CyclotomicTable::get(order);
    long long r = k % static_cast<long long>(order);
    if (r < 0) r += order;
    std::vector<Rat> poly(static_cast<std::size_t>(r) + 1, Rat(0));
    poly[static_cast<std::size_t>(r)] = 1;
    return CycNum(order, reduce(std::move(poly), ent));
  }

  unsigned order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  bool is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  /// True iff the value lies in Q; the rational is written to *out if given.
  bool is_rational(Rat* out = nullptr) const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    if (out) *out = c_[0];
    return true;
  }

  /// Reinterpret in Q(zeta_target); target must be a multiple of order().
  CycNum promoted(unsigned target) const {
    if (target == order_) return *this;
    if (target % order_ != 0)
      throw std::invalid_argument("CycNum::promoted: target order not a multiple");
    const auto& ent = CyclotomicTable::get(target);
    unsigned k = target / order_;
    std::vector<Rat> poly;
    poly.resize(static_cast<std::size_t>(c_.size() - 1) * k + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) poly[i * k] = c_[i];
    return CycNum(target, reduce(std::move(poly), ent));
  }

  friend CycNum operator+(const CycNum& a, const CycNum& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }

  friend CycNum operator-(const CycNum& a, const CycNum& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }

  CycNum operator-() const {
    CycNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    auto [x, y] = aligned(a, b);
    const auto& ent = CyclotomicTable::get(x.order_);
    // Sparse convolution: coefficient vectors are usually near-monomial here.
    std::vector<Rat> prod(2 * ent.degree - 1 > 0 ? 2 * ent.degree - 1 : 1, Rat(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) {
        if (y.c_[j] == 0) continue;
        prod[i + j] += x.c_[i] * y.c_[j];
      }
    }
    return CycNum(x.order_, reduce(std::move(prod), ent));
  }

  friend CycNum operator*(const Rat& s, const CycNum& a) {
    CycNum r = a;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

  /// Multiplicative inverse via the extended Euclidean algorithm against
  /// Phi_E; Phi_E is irreducible over Q, so any nonzero residue works.
  CycNum inverse() const {
    if (is_zero()) throw std::domain_error("CycNum::inverse: zero has no inverse");
    Rat r;
    if (is_rational(&r)) {
      CycNum out = zero(order_);
      out.c_[0] = Rat(1) / r;
      return out;
    }
    const auto& ent = CyclotomicTable::get(order_);
    std::vector<Rat> f(c_.begin(), c_.end());
    upoly::trim(f);
    auto [g, u, v] = upoly::ext_gcd(f, ent.phi);
    (void)v;
    if (upoly::degree(g) != 0)
      throw std::logic_error("CycNum::inverse: residue not coprime to Phi_E");
    for (auto& x : u) x /= g[0];
    return CycNum(order_, reduce(std::move(u), ent));
  }

  CycNum pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum acc = one(order_);
    CycNum base = *this;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    auto [x, y] = aligned(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Numeric image under zeta_E -> exp(2*pi*i/E). For diagnostics and JSON
  /// approximations only; never used to decide equality.
  std::complex<double> approx() const {
    const double tau = 6.283185307179586476925286766559;
    std::complex<double> z = std::polar(1.0, tau / static_cast<double>(order_));
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = acc * z + std::complex<double>(static_cast<double>(c_[i]), 0.0);
    return acc;
  }

  /// Rendering like "1", "-1/2", "z8^3 - z8" (z<E> denotes a primitive
  /// E-th root of unity).
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      Rat a = c_[i];
      if (first) {
        if (a < 0) { os << "-"; a = -a; }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      bool unit_coeff = (a == 1) && i > 0;
      if (!unit_coeff) os << rat_str(a);
      if (i > 0) {
        if (!unit_coeff) os << "*";
        os << "z" << order_;
        if (i > 1) os << "^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  CycNum(unsigned order, std::vector<Rat> coeffs) : order_(order), c_(std::move(coeffs)) {
    c_.resize(CyclotomicTable::get(order_).degree, Rat(0));
  }

  static std::pair<CycNum, CycNum> aligned(const CycNum& a, const CycNum& b) {
    if (a.order_ == b.order_) return {a, b};
    std::uint64_t l = lcm_u64(a.order_, b.order_);
    if (l > CyclotomicTable::kMaxOrder)
      throw std::length_error("CycNum: promoted order exceeds supported scale");
    unsigned target = static_cast<unsigned>(l);
    return {a.promoted(target), b.promoted(target)};
  }

  /// Normal form of an arbitrary-degree coefficient vector mod Phi_E.
  static std::vector<Rat> reduce(std::vector<Rat> poly, const CyclotomicTable::Entry& ent) {
    const unsigned deg = ent.degree;
    if (poly.size() > deg) {
      if (poly.size() <= deg + ent.rows.size()) {
        std::vector<Rat> out(deg, Rat(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
          if (poly[i] == 0) continue;
          if (i < deg) {
            out[i] += poly[i];
          } else {
            for (const auto& [exp, coef] : ent.rows[i - deg]) out[exp] += poly[i] * coef;
          }
        }
        return out;
      }
      // Rare fallback: plain long division (degrees outside the row table).
      upoly::divmod(poly, ent.phi);
    }
    poly.resize(deg, Rat(0));
    return poly;
  }

  unsigned order_;
  std::vector<Rat> c_;  // length phi(order_)
};

/// An exact square root of the rational r as a cyclotomic number (every
/// quadratic surd lives in some Q(zeta_E): Gauss sums for odd primes,
/// zeta_8 +/- zeta_8^-1 for 2, zeta_4 for the sign).  The returned value g
/// satisfies g*g == r exactly; that identity is re-checked before returning.
inline CycNum cyclotomic_sqrt(const Rat& r) {
  if (r == 0) return CycNum(Rat(0));
  Int num = rat_num(r), den = rat_den(r);
  bool negative = num < 0;
  if (negative) num = -num;
  // sqrt(num/den) = sqrt(num*den) / den.
  Int radicand = num * den;
  Int square_part(1);
  std::uint64_t squarefree = 1;
  // Strip square factors; the remaining squarefree part must stay word-sized.
  for (Int p(2); p * p <= radicand; ++p) {
    if (radicand % p != 0) continue;
    unsigned e = 0;
    while (radicand % p == 0) { radicand /= p; ++e; }
    for (unsigned i = 0; i + 1 < e; i += 2) square_part *= p;
    if (e % 2 == 1) {
      Int nf = Int(squarefree) * p;
      if (nf > 1000000) throw std::length_error("cyclotomic_sqrt: squarefree part too large");
      squarefree = static_cast<std::uint64_t>(nf);
    }
  }
  if (radicand > 1) {
    Int nf = Int(squarefree) * radicand;
    if (nf > 1000000) throw std::length_error("cyclotomic_sqrt: squarefree part too large");
    squarefree = static_cast<std::uint64_t>(nf);
  }
  CycNum root = CycNum(Rat(square_part, den));
  for (auto [p, e] : factorize(squarefree)) {
    (void)e;  // squarefree: e == 1
    CycNum factor_root;
    if (p == 2) {
      factor_root = CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, -1);
    } else {
      // Gauss sum over quadratic residues: g^2 = p when p = 1 mod 4, -p when
      // p = 3 mod 4; divide by zeta_4 in the latter case.
      CycNum g = CycNum::zero(static_cast<unsigned>(p));
      std::vector<int> legendre(p, -1);
      legendre[0] = 0;
      for (std::uint64_t t = 1; t < p; ++t) legendre[(t * t) % p] = 1;
      for (std::uint64_t t = 1; t < p; ++t)
        g += Rat(legendre[t]) * CycNum::root_of_unity(static_cast<unsigned>(p), static_cast<long long>(t));
      if (p % 4 == 1) {
        factor_root = g;
      } else {
        factor_root = g * CycNum::root_of_unity(4, 1).inverse();
      }
    }
    root *= factor_root;
  }
  if (negative) root *= CycNum::root_of_unity(4, 1);
  if (root * root != CycNum(r)) throw std::logic_error("cyclotomic_sqrt: verification failed");
  return root;
}

}  // namespace edcert
