#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "edcert/monomial.hpp"

namespace edcert {

/// Length-n bit vector, n <= 128.  Two machine words so length-65 codes fit.
struct CodeWord {
  std::uint64_t w[2] = {0, 0};

  bool bit(unsigned i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(unsigned i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void flip(unsigned i) { w[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  unsigned weight() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  bool none() const { return w[0] == 0 && w[1] == 0; }

  friend CodeWord operator^(CodeWord a, const CodeWord& b) {
    a.w[0] ^= b.w[0];
    a.w[1] ^= b.w[1];
    return a;
  }
  friend CodeWord operator&(CodeWord a, const CodeWord& b) {
    a.w[0] &= b.w[0];
    a.w[1] &= b.w[1];
    return a;
  }
  CodeWord& operator^=(const CodeWord& b) {
    w[0] ^= b.w[0];
    w[1] ^= b.w[1];
    return *this;
  }
  friend bool operator==(const CodeWord&, const CodeWord&) = default;
  friend auto operator<=>(const CodeWord& a, const CodeWord& b) {
    if (auto c = a.w[1] <=> b.w[1]; c != 0) return c;
    return a.w[0] <=> b.w[0];
  }
  int lowest_set() const {
    if (w[0]) return std::countr_zero(w[0]);
    if (w[1]) return 64 + std::countr_zero(w[1]);
    return -1;
  }
};

/// Binary linear code given by an independent generating set.
class BinaryCode {
 public:
  static constexpr unsigned kMaxLen = 128;

  BinaryCode() = default;  // zero code of length 0

  BinaryCode(unsigned n, std::vector<CodeWord> basis) : n_(n), basis_(std::move(basis)) {
    if (n_ < 1 || n_ > kMaxLen) throw std::invalid_argument("BinaryCode: length out of range");
    for (const auto& r : basis_)
      for (unsigned i = n_; i < kMaxLen; ++i)
        if (r.bit(i)) throw std::invalid_argument("BinaryCode: row exceeds stated length");
    // Independence: reduce against a running echelon form.
    std::vector<CodeWord> ech;
    for (const auto& r : basis_) {
      CodeWord cur = r;
      for (const auto& p : ech)
        if (cur.bit(static_cast<unsigned>(p.lowest_set()))) cur ^= p;
      if (cur.none()) throw std::invalid_argument("BinaryCode: generator rows are dependent");
      ech.push_back(cur);
      std::sort(ech.begin(), ech.end(),
                [](const CodeWord& a, const CodeWord& b) { return a.lowest_set() < b.lowest_set(); });
    }
  }

  unsigned length() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<CodeWord>& basis() const { return basis_; }

  /// Visits all 2^d codewords; one row XOR per step.
  template <typename F>
  void for_each_codeword(F&& f) const {
    if (dim() > 24) throw std::length_error("for_each_codeword: 2^d too large");
    CodeWord cur{};
    f(cur);
    const std::uint64_t total = std::uint64_t{1} << dim();
    for (std::uint64_t i = 1; i < total; ++i) {
      cur ^= basis_[static_cast<std::size_t>(std::countr_zero(i))];
      f(cur);
    }
  }

  std::vector<std::string> to_lines() const {
    std::vector<std::string> out;
    for (const auto& r : basis_) {
      std::string s(n_, '0');
      for (unsigned i = 0; i < n_; ++i)
        if (r.bit(i)) s[i] = '1';
      out.push_back(std::move(s));
    }
    return out;
  }

  static BinaryCode from_lines(const std::vector<std::string>& lines) {
    if (lines.empty()) throw std::invalid_argument("from_lines: no rows");
    const std::size_t n = lines.front().size();
    std::vector<CodeWord> rows;
    for (const auto& s : lines) {
      if (s.size() != n) throw std::invalid_argument("from_lines: ragged rows");
      CodeWord w{};
      for (std::size_t i = 0; i < n; ++i) {
        if (s[i] == '1')
          w.set(static_cast<unsigned>(i));
        else if (s[i] != '0')
          throw std::invalid_argument("from_lines: rows must be 0/1 strings");
      }
      rows.push_back(w);
    }
    return BinaryCode(static_cast<unsigned>(n), std::move(rows));
  }

 private:
  unsigned n_ = 0;
  std::vector<CodeWord> basis_;
};

/// Every codeword weight checked directly.  Only usable while 2^d is small.
inline bool doubly_even_by_enumeration(const BinaryCode& L) {
  bool ok = true;
  L.for_each_codeword([&](const CodeWord& c) { ok = ok && c.weight() % 4 == 0; });
  return ok;
}

/// Basis test: every row weight divisible by 4 and every pair of rows meets in
/// an even number of coordinates.  Equivalent to the full sweep because
/// wt(x+y) = wt(x) + wt(y) - 2 wt(x & y) and evenness of intersections is
/// preserved under adding rows.
inline bool doubly_even_by_basis_criterion(const BinaryCode& L) {
  const auto& rows = L.basis();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].weight() % 4 != 0) return false;
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if ((rows[i] & rows[j]).weight() % 2 != 0) return false;
  }
  return true;
}

/// Draws a random code with dimension <= max_dim (dependent draws shrink it).
inline BinaryCode random_code(std::mt19937_64& rng, unsigned n, unsigned max_dim,
                              bool bias_doubly_even) {
  std::uniform_int_distribution<std::uint64_t> bits(0, (n >= 64) ? ~std::uint64_t{0}
                                                                 : (std::uint64_t{1} << n) - 1);
  std::vector<CodeWord> rows;
  std::vector<CodeWord> ech;
  unsigned attempts = 0;
  while (rows.size() < max_dim && attempts++ < 16 * max_dim + 32) {
    CodeWord w{};
    w.w[0] = bits(rng);
    if (n > 64) w.w[1] = rng() & ((std::uint64_t{1} << (n - 64)) - 1);
    if (bias_doubly_even) {
      // Patch weight to 0 mod 4 and intersections to even; misses are fine,
      // they just land in the negative sample.
      while (w.weight() % 4 != 0 && !w.none()) w.flip(static_cast<unsigned>(rng() % n));
      for (const auto& r : rows)
        if ((w & r).weight() % 2 != 0) w ^= r;
    }
    if (w.none()) continue;
    CodeWord cur = w;
    for (const auto& p : ech)
      if (cur.bit(static_cast<unsigned>(p.lowest_set()))) cur ^= p;
    if (cur.none()) continue;
    ech.push_back(cur);
    rows.push_back(w);
  }
  if (rows.empty()) {
    CodeWord w{};
    w.set(0);
    rows.push_back(w);
  }
  return BinaryCode(n, std::move(rows));
}

/// One-time oracle for the basis criterion: agreement with exhaustive
/// enumeration on `trials` random codes of dimension <= 12.  Returns the
/// number of disagreements (zero is required before the criterion is trusted).
inline std::uint64_t validate_basis_criterion(std::uint64_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> len(4, 24);
  std::uint64_t bad = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    unsigned n = len(rng);
    unsigned d = 1 + static_cast<unsigned>(rng() % std::min(12u, n - 1));
    BinaryCode L = random_code(rng, n, d, t % 2 == 0);
    if (doubly_even_by_enumeration(L) != doubly_even_by_basis_criterion(L)) ++bad;
  }
  return bad;
}

inline bool basis_criterion_validated() {
  static const bool ok = validate_basis_criterion(10000, 0xC0DE5EED) == 0;
  return ok;
}

/// Dispatch: exhaustive sweep while 2^d fits the budget, validated basis
/// criterion beyond.
inline bool is_doubly_even(const BinaryCode& L) {
  if (L.dim() <= 20) return doubly_even_by_enumeration(L);
  if (!basis_criterion_validated())
    throw std::logic_error("doubly even basis criterion failed self-validation");
  return doubly_even_by_basis_criterion(L);
}

/// True iff the coordinate functionals restricted to the code are pairwise
/// distinct.  Column values depend on the basis; their equality pattern does
/// not.
inline bool has_distinct_columns(const BinaryCode& L) {
  if (L.length() < 2) return true;
  if (L.dim() > 64) throw std::length_error("has_distinct_columns: dimension > 64");
  std::vector<std::uint64_t> cols(L.length(), 0);
  for (unsigned j = 0; j < L.length(); ++j)
    for (std::size_t t = 0; t < L.dim(); ++t)
      if (L.basis()[t].bit(j)) cols[j] |= std::uint64_t{1} << t;
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

/// The dimension-[n/2] codes behind the Spin_n rows, one construction per
/// residue class of n mod 8.  The even-weight ranges are generated by the
/// consecutive-pair basis e_t + e_{t+1}.
inline BinaryCode family_code(unsigned n) {
  if (n < 7 || (n % 8 != 0 && n % 8 != 1 && n % 8 != 7))
    throw std::invalid_argument("family_code: need n >= 7 with n = 0 or +-1 mod 8");
  std::vector<CodeWord> rows;
  auto pair_row = [](unsigned a0, unsigned b0, unsigned t) {
    CodeWord w{};
    w.set(a0 + t);
    w.set(a0 + t + 1);
    w.set(b0 + t);
    w.set(b0 + t + 1);
    return w;
  };
  auto ones = [](unsigned from, unsigned to) {
    CodeWord w{};
    for (unsigned i = from; i < to; ++i) w.set(i);
    return w;
  };
  if (n % 8 == 0) {
    const unsigned h = n / 2;  // doubled block length 4m
    for (unsigned t = 0; t + 1 < h; ++t) rows.push_back(pair_row(0, h, t));
    rows.push_back(ones(h, n));
  } else if (n % 8 == 1) {
    const unsigned h = (n - 1) / 2;  // leading zero coordinate, then a, a
    for (unsigned t = 0; t + 1 < h; ++t) rows.push_back(pair_row(1, 1 + h, t));
    rows.push_back(ones(1 + h, n));
  } else {
    const unsigned h = (n - 1) / 2;  // a, a, trailing coordinate swept by J
    for (unsigned t = 0; t + 1 < h; ++t) rows.push_back(pair_row(0, h, t));
    rows.push_back(ones(h, n));
  }
  return BinaryCode(n, std::move(rows));
}

/// Diagonal +-1 matrix with entries (-1)^{c_j}; even weight keeps det = +1.
/// Defined on the whole even-weight subspace, not just a chosen code.
inline MonomialMatrix phi_embed(unsigned n, const CodeWord& c) {
  if (n < 1 || n > MonomialMatrix::kMaxDim) throw std::invalid_argument("phi_embed: bad length");
  if (c.weight() % 2 != 0) throw std::domain_error("phi_embed: codeword weight must be even");
  std::vector<std::uint32_t> perm(n);
  std::vector<CycNum> diag(n);
  for (unsigned j = 0; j < n; ++j) {
    perm[j] = j;
    diag[j] = CycNum(Rat(c.bit(j) ? -1 : 1));
  }
  return MonomialMatrix(std::move(perm), std::move(diag));
}

/// Rank statement extracted from a verified code.  The +1 comes from the
/// central element of the double cover; that lift is recorded as cited by the
/// certificate layer, the code-side premises are checked here.
struct SpinRankFragment {
  unsigned n = 0;
  std::size_t dim = 0;
  unsigned rank = 0;  // dim + 1
  bool doubly_even = false;
  bool distinct_columns = false;
};

inline SpinRankFragment spin_bound(const BinaryCode& L) {
  SpinRankFragment f;
  f.n = L.length();
  f.dim = L.dim();
  f.doubly_even = is_doubly_even(L);
  f.distinct_columns = has_distinct_columns(L);
  if (!f.doubly_even || !f.distinct_columns)
    throw std::invalid_argument("spin_bound: code fails a required verifier");
  f.rank = static_cast<unsigned>(f.dim) + 1;
  return f;
}

struct CodeSearchResult {
  unsigned n = 0;
  std::optional<BinaryCode> best;        // best doubly even code with distinct columns
  std::optional<BinaryCode> best_plain;  // best doubly even code, distinctness ignored
  bool exhaustive = false;               // every code of this length was covered
  bool timed_out = false;
  std::uint64_t seed = 0;
};

namespace detail {

struct DfsState {
  std::vector<CodeWord> pool;
  unsigned n = 0;
  std::vector<CodeWord> rows;
  CodeSearchResult* out = nullptr;
  std::chrono::steady_clock::time_point deadline;

  void record() {
    if (rows.empty()) return;
    BinaryCode code(n, rows);
    if (!out->best_plain || code.dim() > out->best_plain->dim()) out->best_plain = code;
    if (has_distinct_columns(code) && (!out->best || code.dim() > out->best->dim()))
      out->best = code;
  }

  // Combination-ordered DFS; doubly evenness is maintained incrementally via
  // the (validated) pairwise condition and re-verified on records.
  bool run(std::size_t start) {
    record();
    for (std::size_t idx = start; idx < pool.size(); ++idx) {
      if (std::chrono::steady_clock::now() > deadline) {
        out->timed_out = true;
        return false;
      }
      const CodeWord& w = pool[idx];
      bool ok = true;
      for (const auto& r : rows)
        if ((w & r).weight() % 2 != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      {
        // Independence against the current rows.
        std::vector<CodeWord> ech;
        for (const auto& r : rows) {
          CodeWord cur = r;
          for (const auto& p : ech)
            if (cur.bit(static_cast<unsigned>(p.lowest_set()))) cur ^= p;
          ech.push_back(cur);
        }
        CodeWord cur = w;
        for (const auto& p : ech)
          if (!p.none() && cur.bit(static_cast<unsigned>(p.lowest_set()))) cur ^= p;
        if (cur.none()) continue;
      }
      rows.push_back(w);
      if (!run(idx + 1)) return false;
      rows.pop_back();
    }
    return true;
  }
};

}  // namespace detail

/// Best-effort search for a doubly even distinct-column code of length n.
/// Exhaustive for n <= 8; greedy restarts from random orders (plus the family
/// code as a seed when one exists) otherwise.
inline CodeSearchResult search_code(unsigned n, std::uint64_t time_budget_ms,
                                    std::uint64_t seed = 0xED5EA12C) {
  if (n < 2 || n > 64) throw std::invalid_argument("search_code: 2 <= n <= 64");
  CodeSearchResult res;
  res.n = n;
  res.seed = seed;
  const auto deadline =
      std::chrono::steady_clock::now() + std::chrono::milliseconds(time_budget_ms);

  if (n % 8 == 0 || n % 8 == 1 || n % 8 == 7) {
    if (n >= 7) {
      BinaryCode fam = family_code(n);
      if (is_doubly_even(fam) && has_distinct_columns(fam)) res.best = fam;
      res.best_plain = fam;
    }
  }

  // Candidate pool: nonzero words of weight 0 mod 4.
  std::vector<CodeWord> pool;
  if (n <= 24) {
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v)
      if (std::popcount(v) % 4 == 0) {
        CodeWord w{};
        w.w[0] = v;
        pool.push_back(w);
      }
  }

  if (n <= 8) {
    detail::DfsState dfs;
    dfs.pool = pool;
    dfs.n = n;
    dfs.out = &res;
    dfs.deadline = deadline;
    res.exhaustive = dfs.run(0);
    return res;
  }

  // Greedy restarts: random pool order for n <= 24, random even-intersection
  // draws beyond that.
  std::mt19937_64 rng(seed);
  auto try_restart = [&]() {
    std::vector<CodeWord> rows;
    if (n <= 24) {
      std::vector<CodeWord> order = pool;
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<CodeWord> ech;
      for (const auto& w : order) {
        bool even = true;
        for (const auto& r : rows)
          if ((w & r).weight() % 2 != 0) {
            even = false;
            break;
          }
        if (!even) continue;
        CodeWord cur = w;
        for (const auto& p : ech)
          if (p.lowest_set() >= 0 && cur.bit(static_cast<unsigned>(p.lowest_set()))) cur ^= p;
        if (cur.none()) continue;
        ech.push_back(cur);
        std::sort(ech.begin(), ech.end(), [](const CodeWord& a, const CodeWord& b) {
          return a.lowest_set() < b.lowest_set();
        });
        rows.push_back(w);
      }
    } else {
      BinaryCode r = random_code(rng, n, n / 2, /*bias_doubly_even=*/true);
      for (const auto& w : r.basis())
        if (w.weight() % 4 == 0) rows.push_back(w);
      if (rows.empty()) return;
      // random_code may have dropped the pairwise condition for dependent
      // draws; filter greedily.
      std::vector<CodeWord> keep;
      for (const auto& w : rows) {
        bool even = w.weight() % 4 == 0;
        for (const auto& r2 : keep) even = even && (w & r2).weight() % 2 == 0;
        if (even) keep.push_back(w);
      }
      rows = keep;
      if (rows.empty()) return;
    }
    if (rows.empty()) return;
    BinaryCode code(n, rows);
    if (!is_doubly_even(code)) return;  // belt and braces; criterion guarantees it
    if (!res.best_plain || code.dim() > res.best_plain->dim()) res.best_plain = code;
    if (has_distinct_columns(code) && (!res.best || code.dim() > res.best->dim()))
      res.best = code;
  };

  while (std::chrono::steady_clock::now() < deadline) try_restart();
  return res;
}

}  // namespace edcert
