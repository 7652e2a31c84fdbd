#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "edcert/codes.hpp"

using namespace edcert;

namespace {

CodeWord word(std::initializer_list<unsigned> bits) {
  CodeWord w{};
  for (unsigned b : bits) w.set(b);
  return w;
}

BinaryCode code(unsigned n, std::initializer_list<std::initializer_list<unsigned>> rows) {
  std::vector<CodeWord> b;
  for (const auto& r : rows) b.push_back(word(r));
  return BinaryCode(n, std::move(b));
}

}  // namespace

TEST_CASE("code construction validates independence and length") {
  CHECK_NOTHROW(code(8, {{0, 1, 2, 3}, {2, 3, 4, 5}}));
  CHECK_THROWS_AS(code(8, {{0, 1}, {2, 3}, {0, 1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(code(4, {{0, 5}}), std::invalid_argument);  // bit beyond length
  CHECK_THROWS_AS(BinaryCode(0, {}), std::invalid_argument);
}

TEST_CASE("doubly even verdicts at frozen examples") {
  // all-ones of length 8: weight 8
  CHECK(is_doubly_even(code(8, {{0, 1, 2, 3, 4, 5, 6, 7}})));
  // two overlapping weight-4 rows whose sum also has weight 4
  CHECK(is_doubly_even(code(8, {{0, 1, 2, 3}, {2, 3, 4, 5}})));
  // a weight-2 generator
  CHECK_FALSE(is_doubly_even(code(8, {{0, 1}})));
  // weight-4 rows with odd intersection: the sum has weight 6
  CHECK_FALSE(is_doubly_even(code(8, {{0, 1, 2, 3}, {3, 4, 5, 6}})));
}

TEST_CASE("basis criterion matches enumeration on random codes") {
  CHECK(validate_basis_criterion(2000, 0xC0DE5EED) == 0);
  CHECK(basis_criterion_validated());
}

TEST_CASE("distinct-columns recognizes collisions and is basis-independent") {
  CHECK_FALSE(has_distinct_columns(code(4, {{0, 1, 2, 3}})));
  CHECK(has_distinct_columns(family_code(8)));
  // duplicated coordinate pair
  CHECK_FALSE(has_distinct_columns(code(6, {{0, 1, 2, 3}, {2, 3, 4, 5}})));

  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryCode L = random_code(rng, 10, 4, false);
    bool verdict = has_distinct_columns(L);
    // random invertible row operations
    std::vector<CodeWord> rows = L.basis();
    for (int op = 0; op < 20; ++op) {
      std::size_t i = rng() % rows.size(), j = rng() % rows.size();
      if (i != j) rows[i] ^= rows[j];
    }
    CHECK(has_distinct_columns(BinaryCode(10, rows)) == verdict);
  }
}

TEST_CASE("family codes across all three residue classes") {
  // n=8: enumerate all 16 codewords
  BinaryCode f8 = family_code(8);
  CHECK(f8.dim() == 4);
  std::set<unsigned> weights;
  f8.for_each_codeword([&](const CodeWord& c) { weights.insert(c.weight()); });
  for (unsigned w : weights) CHECK(w % 4 == 0);
  CHECK(has_distinct_columns(f8));

  CHECK(family_code(7).dim() == 3);
  CHECK(family_code(9).dim() == 4);
  CHECK_THROWS_AS(family_code(10), std::invalid_argument);
  CHECK_THROWS_AS(family_code(6), std::invalid_argument);

  for (unsigned n = 7; n <= 65; ++n) {
    if (n % 8 != 0 && n % 8 != 1 && n % 8 != 7) continue;
    BinaryCode L = family_code(n);
    CHECK(L.dim() == n / 2);
    CHECK(is_doubly_even(L));
    CHECK(has_distinct_columns(L));
  }
}

TEST_CASE("spin rank fragments") {
  SpinRankFragment f8 = spin_bound(family_code(8));
  CHECK(f8.rank == 5);
  CHECK(f8.doubly_even);
  CHECK(f8.distinct_columns);
  CHECK(spin_bound(family_code(7)).rank == 4);
  CHECK(spin_bound(family_code(16)).rank == 9);
  CHECK_THROWS_AS(spin_bound(code(8, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("phi embeds even-weight words as determinant-one sign matrices") {
  CodeWord zero{};
  CHECK(phi_embed(8, zero) == MonomialMatrix::identity(8));

  CodeWord j4 = word({0, 1, 2, 3});
  MonomialMatrix m = phi_embed(8, j4);
  CHECK(m.det() == CycNum::one(1));
  for (unsigned t = 0; t < 8; ++t)
    CHECK(m.diag()[t] == CycNum(Rat(t < 4 ? -1 : 1)));

  CHECK_THROWS_AS(phi_embed(8, word({0, 1, 2})), std::domain_error);

  // homomorphism on random even-weight pairs
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    CodeWord a{}, b{};
    a.w[0] = rng() & 0xFF;
    b.w[0] = rng() & 0xFF;
    if (a.weight() % 2) a.flip(0);
    if (b.weight() % 2) b.flip(0);
    CHECK(phi_embed(8, a ^ b) == phi_embed(8, a) * phi_embed(8, b));
  }
}

TEST_CASE("search is exhaustive for tiny lengths") {
  CodeSearchResult r4 = search_code(4, 2000);
  CHECK(r4.exhaustive);
  CHECK_FALSE(r4.best.has_value());  // no distinct-column doubly even code exists
  REQUIRE(r4.best_plain.has_value());
  CHECK(r4.best_plain->dim() == 1);  // the all-ones word

  CodeSearchResult r8 = search_code(8, 5000);
  CHECK(r8.exhaustive);
  REQUIRE(r8.best.has_value());
  CHECK(r8.best->dim() == 4);
  CHECK(is_doubly_even(*r8.best));
  CHECK(has_distinct_columns(*r8.best));
}

TEST_CASE("search reports honestly at length 12") {
  // No doubly even code of length 12 has distinct columns: dimensions up to 3
  // cannot separate 12 columns, dimensions 4..6 were exhausted by offline
  // search, and dimension 7+ is impossible since these codes are
  // self-orthogonal (d <= n/2).  The search must therefore come back empty on
  // the distinct-column side while still reporting a doubly even best.
  CodeSearchResult r = search_code(12, 1200, 1234);
  CHECK_FALSE(r.best.has_value());
  REQUIRE(r.best_plain.has_value());
  CHECK(r.best_plain->dim() >= 4);
  CHECK(is_doubly_even(*r.best_plain));
}

TEST_CASE("code text format round-trips") {
  BinaryCode f9 = family_code(9);
  std::vector<std::string> lines = f9.to_lines();
  BinaryCode back = BinaryCode::from_lines(lines);
  CHECK(back.length() == f9.length());
  CHECK(back.dim() == f9.dim());
  CHECK(back.to_lines() == lines);
  CHECK_THROWS_AS(BinaryCode::from_lines({"01", "0"}), std::invalid_argument);
  CHECK_THROWS_AS(BinaryCode::from_lines({"012"}), std::invalid_argument);
}
