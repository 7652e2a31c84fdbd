#pragma once

// Monomial matrices over cyclotomic fields, regular-representation builders
// for finite abelian groups, and the exact determinant / commutation
// verifiers.  The permutation matrix P_a acts on the group basis (enumerated
// lexicographically) by left translation; the diagonal matrix D_chi scales
// basis element b by chi(b).  Projective cosets mod the scalar subgroup
// generated by zeta_e * I are compared by scanning the e scalar twists.

#include <optional>

#include "abgroup.hpp"

namespace edcert {

class MonomialMatrix {
 public:
  static constexpr unsigned kMaxDim = 64;

  MonomialMatrix(std::vector<std::uint32_t> perm, std::vector<CycNum> diag)
      : perm_(std::move(perm)), diag_(std::move(diag)) {
    if (perm_.size() != diag_.size())
      throw std::invalid_argument("MonomialMatrix: perm/diag size mismatch");
    if (perm_.size() > kMaxDim)
      throw std::length_error("MonomialMatrix: dimension exceeds supported scale");
    std::vector<bool> seen(perm_.size(), false);
    for (auto p : perm_) {
      if (p >= perm_.size() || seen[p])
        throw std::invalid_argument("MonomialMatrix: not a permutation");
      seen[p] = true;
    }
    for (const auto& d : diag_)
      if (d.is_zero()) throw std::invalid_argument("MonomialMatrix: zero scale entry");
  }

  static MonomialMatrix identity(unsigned n) {
    std::vector<std::uint32_t> perm(n);
    for (unsigned j = 0; j < n; ++j) perm[j] = j;
    return MonomialMatrix(std::move(perm), std::vector<CycNum>(n, CycNum(Rat(1))));
  }

  unsigned dim() const { return static_cast<unsigned>(perm_.size()); }
  /// Column j holds its sole nonzero entry scale(j) in row row_of(j).
  std::uint32_t row_of(unsigned col) const { return perm_[col]; }
  const CycNum& scale(unsigned col) const { return diag_[col]; }
  const std::vector<std::uint32_t>& perm() const { return perm_; }
  const std::vector<CycNum>& diag() const { return diag_; }

  friend MonomialMatrix operator*(const MonomialMatrix& m, const MonomialMatrix& n) {
    if (m.dim() != n.dim()) throw std::invalid_argument("MonomialMatrix: dimension mismatch");
    std::vector<std::uint32_t> perm(m.dim());
    std::vector<CycNum> diag;
    diag.reserve(m.dim());
    for (unsigned j = 0; j < m.dim(); ++j) {
      perm[j] = m.perm_[n.perm_[j]];
      diag.push_back(n.diag_[j] * m.diag_[n.perm_[j]]);
    }
    return MonomialMatrix(std::move(perm), std::move(diag));
  }

  friend MonomialMatrix operator*(const CycNum& s, const MonomialMatrix& m) {
    std::vector<CycNum> diag;
    diag.reserve(m.dim());
    for (const auto& d : m.diag_) diag.push_back(s * d);
    return MonomialMatrix(m.perm_, std::move(diag));
  }

  /// Entrywise matrix inverse; no group-theoretic shortcuts, so this stays an
  /// independent check against algebraic identities.
  MonomialMatrix inverse() const {
    std::vector<std::uint32_t> perm(dim());
    std::vector<CycNum> diag(dim());
    for (unsigned j = 0; j < dim(); ++j) {
      perm[perm_[j]] = j;
      diag[perm_[j]] = diag_[j].inverse();
    }
    return MonomialMatrix(std::move(perm), std::move(diag));
  }

  int perm_sign() const {
    std::vector<bool> seen(dim(), false);
    int sign = 1;
    for (unsigned start = 0; start < dim(); ++start) {
      if (seen[start]) continue;
      unsigned len = 0;
      for (unsigned j = start; !seen[j]; j = perm_[j]) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) sign = -sign;
    }
    return sign;
  }

  /// Exact determinant: permutation sign times the product of scale entries.
  CycNum det() const {
    CycNum d{Rat(perm_sign())};
    for (const auto& x : diag_) d *= x;
    return d;
  }

  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
    return a.perm_ == b.perm_ && a.diag_ == b.diag_;
  }
  friend bool operator!=(const MonomialMatrix& a, const MonomialMatrix& b) { return !(a == b); }

  /// Dense rendering for diagnostics on small dimensions.
  std::string str() const {
    std::ostringstream os;
    for (unsigned i = 0; i < dim(); ++i) {
      os << (i == 0 ? "[" : " ");
      for (unsigned j = 0; j < dim(); ++j) {
        os << (perm_[j] == i ? diag_[j].str() : "0");
        if (j + 1 < dim()) os << ", ";
      }
      os << (i + 1 == dim() ? "]" : ";\n");
    }
    return os.str();
  }

 private:
  std::vector<std::uint32_t> perm_;
  std::vector<CycNum> diag_;
};

/// Left-translation permutation matrix of a on the lexicographic group basis.
inline MonomialMatrix perm_matrix(const AbGroup& A, const GroupElement& a) {
  auto elems = A.enumerate();
  std::vector<std::uint32_t> perm(elems.size());
  for (std::size_t j = 0; j < elems.size(); ++j)
    perm[j] = static_cast<std::uint32_t>(A.index_of(A.add(a, elems[j])));
  return MonomialMatrix(std::move(perm), std::vector<CycNum>(elems.size(), CycNum(Rat(1))));
}

/// Diagonal character matrix: basis element b scales by chi(b).
inline MonomialMatrix diag_matrix(const AbGroup& A, const Character& chi) {
  auto elems = A.enumerate();
  std::vector<std::uint32_t> perm(elems.size());
  std::vector<CycNum> diag;
  diag.reserve(elems.size());
  for (std::size_t j = 0; j < elems.size(); ++j) {
    perm[j] = static_cast<std::uint32_t>(j);
    diag.push_back(A.eval_char(chi, elems[j]));
  }
  return MonomialMatrix(std::move(perm), std::move(diag));
}

// ---------------------------------------------------------------------------
// Determinant identities.

struct DetCheck {
  bool is_perm = true;        // otherwise a character diagonal
  std::string label;          // element or character residues
  CycNum exact;               // determinant computed from the matrix
  CycNum predicted;           // closed-form value
  bool is_one = false;
};

struct DetReport {
  bool hypothesis = false;    // 2-Sylow non-cyclic or trivial
  bool all_det_one = false;
  std::vector<DetCheck> checks;
};

inline std::string residue_label(const std::vector<std::uint32_t>& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  return s + ")";
}

/// Exact determinant of every P_a and D_chi, compared against the closed
/// forms sign(sigma_a) = (-1)^{(m-1) n/m} and det D_chi = zeta_m^{m(m-1)/2 *
/// n/m} (m the order of a resp. chi).  A mismatch between the exact value and
/// the closed form is an internal inconsistency and throws; the report
/// records whether every determinant is one, which must coincide with the
/// 2-Sylow hypothesis.
inline DetReport verify_det_lemma(const AbGroup& A) {
  if (A.order() > MonomialMatrix::kMaxDim)
    throw std::length_error("verify_det_lemma: group order exceeds matrix scale");
  DetReport rep;
  rep.hypothesis = A.sylow2_noncyclic_or_trivial();
  rep.all_det_one = true;
  const std::uint64_t n = A.order();
  for (const auto& a : A.enumerate()) {
    DetCheck c;
    c.is_perm = true;
    c.label = residue_label(a.r);
    c.exact = perm_matrix(A, a).det();
    const std::uint64_t m = A.element_order(a);
    bool odd_sign = ((m - 1) % 2 == 1) && ((n / m) % 2 == 1);
    c.predicted = CycNum(Rat(odd_sign ? -1 : 1));
    if (c.exact != c.predicted)
      throw std::logic_error("determinant identity failed for a permutation matrix");
    c.is_one = c.exact.is_one();
    rep.all_det_one = rep.all_det_one && c.is_one;
    rep.checks.push_back(std::move(c));
  }
  for (const auto& chi : A.characters()) {
    DetCheck c;
    c.is_perm = false;
    c.label = residue_label(chi.r);
    c.exact = diag_matrix(A, chi).det();
    const std::uint64_t m = A.char_order(chi);
    long long exp = static_cast<long long>(m * (m - 1) / 2 % m * (n / m % m) % m);
    c.predicted = CycNum::root_of_unity(static_cast<unsigned>(m), exp);
    if (c.exact != c.predicted)
      throw std::logic_error("determinant identity failed for a character diagonal");
    c.is_one = c.exact.is_one();
    rep.all_det_one = rep.all_det_one && c.is_one;
    rep.checks.push_back(std::move(c));
  }
  if (rep.all_det_one != rep.hypothesis)
    throw std::logic_error("determinant census disagrees with the 2-Sylow hypothesis");
  return rep;
}

struct CommutationReport {
  bool ok = true;
  std::string witness;  // first violating (a, chi) if any
};

/// D_chi P_a = chi(a) P_a D_chi as exact matrices, for every pair.
inline CommutationReport verify_commutation(const AbGroup& A) {
  if (A.order() > MonomialMatrix::kMaxDim)
    throw std::length_error("verify_commutation: group order exceeds matrix scale");
  CommutationReport rep;
  auto elems = A.enumerate();
  auto chars = A.characters();
  std::vector<MonomialMatrix> perms, diags;
  perms.reserve(elems.size());
  diags.reserve(chars.size());
  for (const auto& a : elems) perms.push_back(perm_matrix(A, a));
  for (const auto& chi : chars) diags.push_back(diag_matrix(A, chi));
  for (std::size_t ci = 0; ci < chars.size(); ++ci) {
    for (std::size_t ai = 0; ai < elems.size(); ++ai) {
      MonomialMatrix lhs = diags[ci] * perms[ai];
      MonomialMatrix rhs = A.eval_char(chars[ci], elems[ai]) * (perms[ai] * diags[ci]);
      if (lhs != rhs) {
        rep.ok = false;
        rep.witness = "a=" + residue_label(elems[ai].r) + " chi=" + residue_label(chars[ci].r);
        return rep;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Projective cosets and the subgroups they generate.

class ProjectiveCoset {
 public:
  ProjectiveCoset(MonomialMatrix rep, unsigned e) : rep_(std::move(rep)), e_(e) {
    if (e_ == 0) throw std::invalid_argument("ProjectiveCoset: modulus must be positive");
  }

  const MonomialMatrix& rep() const { return rep_; }
  unsigned modulus() const { return e_; }

  friend ProjectiveCoset operator*(const ProjectiveCoset& a, const ProjectiveCoset& b) {
    if (a.e_ != b.e_) throw std::invalid_argument("ProjectiveCoset: modulus mismatch");
    return ProjectiveCoset(a.rep_ * b.rep_, a.e_);
  }

  ProjectiveCoset inverse() const { return ProjectiveCoset(rep_.inverse(), e_); }

  /// Equality mod <zeta_e I>: same permutation part and some scalar twist
  /// zeta_e^k matches the diagonals exactly.  Scans all e twists; the first
  /// column acts as a cheap reject before full comparison.
  friend bool operator==(const ProjectiveCoset& a, const ProjectiveCoset& b) {
    if (a.e_ != b.e_) return false;
    if (a.rep_.perm() != b.rep_.perm()) return false;
    const unsigned n = a.rep_.dim();
    if (n == 0) return true;
    for (unsigned k = 0; k < a.e_; ++k) {
      CycNum twist = CycNum::root_of_unity(a.e_, k);
      if (twist * a.rep_.scale(0) != b.rep_.scale(0)) continue;
      bool all = true;
      for (unsigned j = 1; j < n && all; ++j)
        all = (twist * a.rep_.scale(j) == b.rep_.scale(j));
      if (all) return true;
    }
    return false;
  }
  friend bool operator!=(const ProjectiveCoset& a, const ProjectiveCoset& b) { return !(a == b); }

  bool is_identity() const { return *this == ProjectiveCoset(MonomialMatrix::identity(rep_.dim()), e_); }

  /// Multiplicative order of the coset; guarded against runaway loops.
  unsigned order(unsigned cap = 4096) const {
    ProjectiveCoset acc = *this;
    for (unsigned k = 1; k <= cap; ++k) {
      if (acc.is_identity()) return k;
      acc = acc * *this;
    }
    throw std::logic_error("ProjectiveCoset::order: cap exceeded");
  }

 private:
  MonomialMatrix rep_;
  unsigned e_;
};

/// The image of A x A^ in SL_n / <zeta_e I> (or PGL_n when e = n = |A|),
/// with every verification the construction performs recorded.
struct SubgroupPresentation {
  AbGroup A;
  unsigned e = 1;
  unsigned n = 1;
  std::vector<std::pair<GroupElement, Character>> labels;
  std::vector<ProjectiveCoset> elements;  // parallel to labels
  std::uint64_t order = 0;                // |A|^2 once injectivity is verified
  unsigned rank = 0;                      // 2 * rank(A)
  bool dets_all_one = false;
};

/// Builds the projective image of (a, chi) -> coset of P_a D_chi and verifies
/// it is an injective homomorphism.
///
/// Preconditions: exponent(A) | e and e | |A|.  When e < |A| the target is a
/// proper quotient of SL_n, so the 2-Sylow hypothesis (non-cyclic or trivial)
/// is required and every determinant is verified to be one; when e = |A| the
/// scalar quotient absorbs determinants and no hypothesis is needed.
inline SubgroupPresentation build_H(const AbGroup& A, unsigned e) {
  const std::uint64_t n = A.order();
  if (n > 16)
    throw std::length_error("build_H: presentation scale is |A| <= 16");
  if (e == 0 || e % A.exponent() != 0)
    throw std::invalid_argument("build_H: e must be a multiple of exponent(A)");
  if (n % e != 0)
    throw std::invalid_argument("build_H: e must divide |A| so that zeta_e I has determinant one");
  const bool full_projective = (e == n);
  if (!full_projective && !A.sylow2_noncyclic_or_trivial())
    throw std::invalid_argument(
        "build_H: e < |A| needs a non-cyclic or trivial 2-Sylow subgroup (determinants would leave SL)");

  SubgroupPresentation H{A, e, static_cast<unsigned>(n), {}, {}, 0, 0, false};
  auto elems = A.enumerate();
  auto chars = A.characters();
  // Promote scale entries into Q(zeta_lcm(exponent, e)) up front so that later
  // coset comparisons stay in one field.
  const unsigned common = static_cast<unsigned>(lcm_u64(A.exponent(), e));
  H.dets_all_one = true;
  for (const auto& a : elems) {
    MonomialMatrix pa = perm_matrix(A, a);
    for (const auto& chi : chars) {
      MonomialMatrix dc = diag_matrix(A, chi);
      MonomialMatrix m = pa * dc;
      std::vector<CycNum> diag;
      diag.reserve(m.dim());
      for (unsigned j = 0; j < m.dim(); ++j) diag.push_back(m.scale(j).promoted(common));
      MonomialMatrix promoted(m.perm(), std::move(diag));
      CycNum d = promoted.det();
      H.dets_all_one = H.dets_all_one && d.is_one();
      if (!full_projective && !d.is_one())
        throw std::logic_error("build_H: determinant left SL despite the 2-Sylow hypothesis");
      H.labels.emplace_back(a, chi);
      H.elements.emplace_back(std::move(promoted), e);
    }
  }

  const std::size_t count = H.elements.size();
  auto slot = [&](const GroupElement& a, const Character& chi) {
    return A.index_of(a) * A.order() + A.index_of(GroupElement{chi.r});
  };
  // Homomorphism: the product of two images is the image of the sum, as cosets.
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      const auto& [a, chi] = H.labels[i];
      const auto& [b, mu] = H.labels[j];
      ProjectiveCoset prod = H.elements[i] * H.elements[j];
      const ProjectiveCoset& expect = H.elements[slot(A.add(a, b), A.char_mul(chi, mu))];
      if (!(prod == expect))
        throw std::logic_error("build_H: homomorphism check failed at " + residue_label(a.r) +
                               "," + residue_label(chi.r));
    }
  }
  // Injectivity: the |A|^2 cosets are pairwise distinct.
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (H.elements[i] == H.elements[j])
        throw std::logic_error("build_H: distinct labels map to the same coset");

  H.order = static_cast<std::uint64_t>(count);
  H.rank = 2 * A.rank();
  return H;
}

/// The preimage in SL_n / <zeta_{p^i} I> of the projective image of
/// (Z/p)^r x dual: the base subgroup extended by the central coset of
/// zeta_{p^r} I, an abelian group of type (Z/p)^{2r} x Z/p^{r-i}.
struct CentralProductPresentation {
  SubgroupPresentation base;
  unsigned p = 2, r = 1, i = 1;
  unsigned center_order = 1;                  // p^{r-i}
  std::optional<ProjectiveCoset> center_gen;  // absent when i = r
  std::vector<std::uint32_t> abstract_factors;
  std::uint64_t order = 0;
  unsigned rank = 0;
};

inline CentralProductPresentation build_H_with_center(unsigned p, unsigned r, unsigned i) {
  if (r == 0 || i == 0 || i > r) throw std::invalid_argument("build_H_with_center: need 1 <= i <= r");
  {
    auto f = factorize(p);
    if (f.size() != 1 || f[0].second != 1) throw std::invalid_argument("build_H_with_center: p must be prime");
  }
  std::uint64_t n = 1, e = 1;
  for (unsigned k = 0; k < r; ++k) n *= p;
  for (unsigned k = 0; k < i; ++k) e *= p;
  if (n > 16) throw std::length_error("build_H_with_center: presentation scale is p^r <= 16");

  CentralProductPresentation out;
  out.p = p;
  out.r = r;
  out.i = i;
  out.base = build_H(AbGroup::elementary(p, r), static_cast<unsigned>(e));
  std::uint64_t c = n / e;  // p^{r-i}
  out.center_order = static_cast<unsigned>(c);

  std::vector<ProjectiveCoset> all = out.base.elements;
  if (c > 1) {
    const unsigned common = static_cast<unsigned>(lcm_u64(out.base.A.exponent(), n));
    MonomialMatrix zI(std::vector<std::uint32_t>([&] {
                        std::vector<std::uint32_t> id(n);
                        for (unsigned j = 0; j < n; ++j) id[j] = j;
                        return id;
                      }()),
                      std::vector<CycNum>(n, CycNum::root_of_unity(static_cast<unsigned>(n), 1).promoted(common)));
    if (!zI.det().is_one())
      throw std::logic_error("build_H_with_center: central scalar has determinant != 1");
    ProjectiveCoset gen(zI, static_cast<unsigned>(e));
    if (gen.order() != c)
      throw std::logic_error("build_H_with_center: central coset has unexpected order");
    // The central generator must commute with the base (it is scalar, but the
    // check goes through the coset calculus on purpose).
    for (const auto& el : out.base.elements)
      if (!(gen * el == el * gen))
        throw std::logic_error("build_H_with_center: central generator fails to commute");
    std::vector<ProjectiveCoset> extended;
    extended.reserve(all.size() * c);
    ProjectiveCoset power(MonomialMatrix::identity(static_cast<unsigned>(n)), static_cast<unsigned>(e));
    for (std::uint64_t j = 0; j < c; ++j) {
      for (const auto& el : all) extended.push_back(el * power);
      power = power * gen;
    }
    all = std::move(extended);
    out.center_gen = gen;
  }
  // Injectivity of the product map (Z/p)^{2r} x Z/p^{r-i} -> quotient group.
  for (std::size_t x = 0; x < all.size(); ++x)
    for (std::size_t y = x + 1; y < all.size(); ++y)
      if (all[x] == all[y])
        throw std::logic_error("build_H_with_center: product map is not injective");

  out.abstract_factors.assign(2 * r, p);
  if (c > 1) out.abstract_factors.push_back(static_cast<std::uint32_t>(c));
  out.order = static_cast<std::uint64_t>(out.base.order) * c;
  out.rank = AbGroup(out.abstract_factors).rank();
  return out;
}

}  // namespace edcert
