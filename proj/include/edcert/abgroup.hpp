#pragma once

// Finite abelian groups presented as explicit products of cyclic factors,
// together with their elements and characters.  A group is a factor list
// [n_1, ..., n_k] (each n_i >= 2, empty list = trivial group); an element or
// character is its residue tuple.  Characters take values in Q(zeta_e) where
// e is the group exponent, via the pairing
//     chi(a) = zeta_e ^ ( sum_i chi_i * a_i * (e / n_i) ).

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>

#include "cyclotomic.hpp"

namespace edcert {

struct GroupElement {
  std::vector<std::uint32_t> r;  // residues, r[i] in [0, n_i)
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct Character {
  std::vector<std::uint32_t> r;  // exponent tuple of the dual group
  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
};

class AbGroup {
 public:
  static constexpr std::uint64_t kMaxOrder = 1u << 20;

  /// The trivial group.
  AbGroup() = default;

  explicit AbGroup(std::vector<std::uint32_t> factors) : factors_(std::move(factors)) {
    std::uint64_t ord = 1;
    for (auto n : factors_) {
      if (n < 2) throw std::invalid_argument("AbGroup: cyclic factors must be >= 2");
      ord *= n;
      if (ord > kMaxOrder) throw std::length_error("AbGroup: order exceeds supported scale");
    }
    order_ = ord;
    exponent_ = 1;
    for (auto n : factors_) exponent_ = lcm_u64(exponent_, n);
  }

  /// (Z/p)^r.
  static AbGroup elementary(std::uint32_t p, unsigned r) {
    return AbGroup(std::vector<std::uint32_t>(r, p));
  }

  /// Accepts strings like "Z4", "Z2^3", "Z2^6xZ4" (case-insensitive).
  static AbGroup parse(std::string_view spec) {
    std::vector<std::uint32_t> factors;
    std::size_t pos = 0;
    auto fail = [&spec]() -> std::invalid_argument {
      return std::invalid_argument("unrecognized group spec: " + std::string(spec));
    };
    auto read_uint = [&]() -> std::uint64_t {
      if (pos >= spec.size() || !std::isdigit(static_cast<unsigned char>(spec[pos]))) throw fail();
      std::uint64_t v = 0;
      while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) {
        v = v * 10 + (spec[pos] - '0');
        if (v > kMaxOrder) throw fail();
        ++pos;
      }
      return v;
    };
    if (spec.empty()) throw fail();
    while (true) {
      if (pos >= spec.size() || std::tolower(static_cast<unsigned char>(spec[pos])) != 'z') throw fail();
      ++pos;
      std::uint64_t n = read_uint();
      if (n < 2) throw fail();
      std::uint64_t rep = 1;
      if (pos < spec.size() && spec[pos] == '^') {
        ++pos;
        rep = read_uint();
        if (rep == 0 || rep > 64) throw fail();
      }
      for (std::uint64_t i = 0; i < rep; ++i) factors.push_back(static_cast<std::uint32_t>(n));
      if (pos == spec.size()) break;
      if (std::tolower(static_cast<unsigned char>(spec[pos])) != 'x') throw fail();
      ++pos;
    }
    return AbGroup(std::move(factors));
  }

  const std::vector<std::uint32_t>& factors() const { return factors_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t exponent() const { return exponent_; }
  std::size_t num_factors() const { return factors_.size(); }

  /// Minimal number of generators: max over primes p of the number of
  /// factors p divides.
  unsigned rank() const {
    unsigned best = 0;
    for (auto [p, e] : factorize(exponent_)) {
      (void)e;
      unsigned count = 0;
      for (auto n : factors_)
        if (n % p == 0) ++count;
      best = std::max(best, count);
    }
    return best;
  }

  /// True iff the 2-Sylow subgroup is cyclic or trivial (at most one even factor).
  bool sylow2_cyclic_or_trivial() const { return even_factor_count() <= 1; }

  /// True iff the 2-Sylow subgroup is non-cyclic or trivial.  This is the
  /// structural condition under which every regular-representation
  /// permutation matrix and character diagonal has determinant one.
  bool sylow2_noncyclic_or_trivial() const { return even_factor_count() != 1; }

  GroupElement zero() const { return GroupElement{std::vector<std::uint32_t>(factors_.size(), 0)}; }
  Character trivial_char() const { return Character{std::vector<std::uint32_t>(factors_.size(), 0)}; }

  GroupElement add(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    GroupElement c = zero();
    for (std::size_t i = 0; i < factors_.size(); ++i)
      c.r[i] = (a.r[i] + b.r[i]) % factors_[i];
    return c;
  }

  GroupElement neg(const GroupElement& a) const {
    check(a);
    GroupElement c = zero();
    for (std::size_t i = 0; i < factors_.size(); ++i)
      c.r[i] = (factors_[i] - a.r[i]) % factors_[i];
    return c;
  }

  unsigned element_order(const GroupElement& a) const {
    check(a);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      ord = lcm_u64(ord, factors_[i] / gcd_u64(factors_[i], a.r[i]));
    return static_cast<unsigned>(ord);
  }

  Character char_mul(const Character& x, const Character& y) const {
    Character c = trivial_char();
    for (std::size_t i = 0; i < factors_.size(); ++i)
      c.r[i] = (x.r[i] + y.r[i]) % factors_[i];
    return c;
  }

  Character char_inv(const Character& x) const {
    Character c = trivial_char();
    for (std::size_t i = 0; i < factors_.size(); ++i)
      c.r[i] = (factors_[i] - x.r[i]) % factors_[i];
    return c;
  }

  unsigned char_order(const Character& x) const {
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      ord = lcm_u64(ord, factors_[i] / gcd_u64(factors_[i], x.r[i]));
    return static_cast<unsigned>(ord);
  }

  /// chi(a) as an exact root of unity of order exponent().
  CycNum eval_char(const Character& chi, const GroupElement& a) const {
    check(a);
    if (chi.r.size() != factors_.size())
      throw std::invalid_argument("eval_char: character/group shape mismatch");
    unsigned e = static_cast<unsigned>(exponent_);
    std::uint64_t accum = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      std::uint64_t step = exponent_ / factors_[i];
      accum = (accum + static_cast<std::uint64_t>(chi.r[i]) * a.r[i] % e * step) % e;
    }
    return CycNum::root_of_unity(e, static_cast<long long>(accum));
  }

  /// All elements in lexicographic order of residue tuples, leftmost factor
  /// most significant.  This order is the basis order of the regular
  /// representation and is fixed for reproducibility.
  std::vector<GroupElement> enumerate() const {
    std::vector<GroupElement> out;
    out.reserve(order_);
    GroupElement cur = zero();
    while (true) {
      out.push_back(cur);
      std::size_t i = factors_.size();
      while (i > 0) {
        --i;
        if (++cur.r[i] < factors_[i]) break;
        cur.r[i] = 0;
        if (i == 0) return out;
      }
      if (factors_.empty()) return out;
    }
  }

  /// All characters, residue tuples in the same lexicographic order.
  std::vector<Character> characters() const {
    std::vector<Character> out;
    out.reserve(order_);
    for (const auto& g : enumerate()) out.push_back(Character{g.r});
    return out;
  }

  /// Lex rank of an element; inverse of element_at.
  std::uint64_t index_of(const GroupElement& a) const {
    check(a);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + a.r[i];
    return idx;
  }

  GroupElement element_at(std::uint64_t idx) const {
    if (idx >= order_) throw std::out_of_range("AbGroup::element_at");
    GroupElement a = zero();
    for (std::size_t i = factors_.size(); i-- > 0;) {
      a.r[i] = static_cast<std::uint32_t>(idx % factors_[i]);
      idx /= factors_[i];
    }
    return a;
  }

  /// Canonical spec string, e.g. "Z2^3xZ4".
  std::string str() const {
    if (factors_.empty()) return "Z1";
    std::string out;
    std::size_t i = 0;
    while (i < factors_.size()) {
      std::size_t j = i;
      while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
      if (!out.empty()) out += "x";
      out += "Z" + std::to_string(factors_[i]);
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  }

  friend bool operator==(const AbGroup& a, const AbGroup& b) { return a.factors_ == b.factors_; }

 private:
  void check(const GroupElement& a) const {
    if (a.r.size() != factors_.size())
      throw std::invalid_argument("group element has wrong number of residues");
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (a.r[i] >= factors_[i]) throw std::invalid_argument("group element residue out of range");
  }

  unsigned even_factor_count() const {
    unsigned c = 0;
    for (auto n : factors_)
      if (n % 2 == 0) ++c;
    return c;
  }

  std::vector<std::uint32_t> factors_;
  std::uint64_t order_ = 1;
  std::uint64_t exponent_ = 1;
};

/// Every factor decomposition [n_1, ..., n_k] (n_i >= 2, non-decreasing) with
/// product at most `max_order`, plus the trivial group.  Distinct
/// decompositions of isomorphic groups are listed separately on purpose: the
/// regular representation sees the decomposition, not just the isomorphism
/// class.
inline std::vector<AbGroup> all_abelian_groups_up_to(std::uint64_t max_order) {
  std::vector<AbGroup> out;
  out.push_back(AbGroup());
  std::vector<std::uint32_t> stack;
  auto rec = [&](auto&& self, std::uint64_t product, std::uint32_t min_factor) -> void {
    for (std::uint32_t n = min_factor; product * n <= max_order; ++n) {
      stack.push_back(n);
      out.push_back(AbGroup(stack));
      self(self, product * n, n);
      stack.pop_back();
    }
  };
  rec(rec, 1, 2);
  std::sort(out.begin(), out.end(), [](const AbGroup& a, const AbGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.factors() < b.factors();
  });
  return out;
}

}  // namespace edcert
