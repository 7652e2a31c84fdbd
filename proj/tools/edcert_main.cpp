// edcert: command line front end for the certificate library.
//
// Exit codes: 0 success, 1 a verification failed, 2 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "edcert/certify.hpp"
#include "edcert/symx.hpp"
#include "edcert/tschirn.hpp"

namespace {

using edcert::ordered_json;

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  bool all = false;
  std::string family;
  unsigned n = 0, p = 0, r = 0, i = 0;
  std::string json_path;
};

std::vector<edcert::BoundSpec> specs_for(const BoundsArgs& a) {
  using edcert::BoundSpec;
  using edcert::GroupFamily;
  if (a.all) return edcert::default_bound_specs();
  if (a.family.empty()) return {};
  auto need = [&](unsigned v, const char* flag) {
    if (v == 0) throw std::invalid_argument(std::string("bounds: family ") + a.family +
                                            " requires " + flag);
    return v;
  };
  if (a.family == "O") return {BoundSpec::dim(GroupFamily::O_n, need(a.n, "--n"))};
  if (a.family == "SO") return {BoundSpec::dim(GroupFamily::SO_n, need(a.n, "--n"))};
  if (a.family == "PO") return {BoundSpec::dim(GroupFamily::PO_n, need(a.n, "--n"))};
  if (a.family == "PGL")
    return {BoundSpec::prime_power(GroupFamily::PGL, need(a.p, "--p"), need(a.r, "--r"))};
  if (a.family == "SL")
    return {BoundSpec::prime_power(GroupFamily::SL_mod_mu, need(a.p, "--p"), need(a.r, "--r"),
                                   need(a.i, "--i"))};
  if (a.family == "Spin") return {BoundSpec::dim(GroupFamily::Spin, need(a.n, "--n"))};
  if (a.family == "G2") return {BoundSpec::exceptional(GroupFamily::G2)};
  if (a.family == "2E7") return {BoundSpec::exceptional(GroupFamily::SL8_core_2E7)};
  throw std::invalid_argument("bounds: unknown family " + a.family +
                              " (expected O, SO, PO, PGL, SL, Spin, G2, 2E7)");
}

int run_bounds(const BoundsArgs& a) {
  auto rows = edcert::bounds_table(specs_for(a));
  std::cout << edcert::render_text_table(rows);
  if (!a.json_path.empty()) {
    std::ofstream out(a.json_path);
    if (!out) throw std::invalid_argument("bounds: cannot open " + a.json_path);
    out << edcert::table_json(rows).dump(2) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- subgroup

int run_subgroup(const std::string& group, unsigned e, bool verify_centralizer) {
  edcert::AbGroup A = edcert::AbGroup::parse(group);
  edcert::SubgroupPresentation H = edcert::build_H(A, e);
  std::cout << "A = " << A.str() << ", e = " << H.e << ", ambient GL_" << H.n << "\n";
  std::cout << "|H| = " << H.order << ", rank " << H.rank
            << (H.dets_all_one ? ", all determinants 1\n" : "\n");
  std::cout << "generators (images of the standard generating pairs):\n";
  for (std::size_t k = 0; k < H.labels.size(); ++k) {
    const auto& [a, chi] = H.labels[k];
    auto unit = [](const std::vector<std::uint32_t>& r) {
      unsigned nz = 0;
      for (auto v : r) nz += (v == 1) ? 1 : (v != 0 ? 2 : 0);
      return nz == 1;
    };
    auto zero = [](const std::vector<std::uint32_t>& r) {
      for (auto v : r)
        if (v) return false;
      return true;
    };
    std::string name;
    if (unit(a.r) && zero(chi.r)) name = "P" + edcert::residue_label(a.r);
    if (zero(a.r) && unit(chi.r)) name = "D" + edcert::residue_label(chi.r);
    if (name.empty()) continue;
    std::cout << name << " =\n" << H.elements[k].rep().str() << "\n";
  }
  if (verify_centralizer) {
    edcert::CentralizerCert cert = edcert::certify_self_centralizing(A, e);
    std::cout << "centralizer: matrix lines form a basis: "
              << (cert.lines_form_basis ? "yes" : "no")
              << "; conjugation rows distinct: " << (cert.rows_distinct ? "yes" : "no") << "\n";
    if (!cert.certified()) {
      if (!cert.collision.empty()) std::cout << "colliding rows: " << cert.collision << "\n";
      return 1;
    }
  }
  return 0;
}

// ---------------------------------------------------------------- code

int run_code_family(unsigned n) {
  edcert::BinaryCode L = edcert::family_code(n);
  edcert::SpinRankFragment frag = edcert::spin_bound(L);
  std::cout << "length " << frag.n << ", dimension " << frag.dim << ", witness rank "
            << frag.rank << "\n";
  for (const auto& line : L.to_lines()) std::cout << line << "\n";
  std::cout << "doubly even: " << (frag.doubly_even ? "yes" : "no")
            << "; columns distinct: " << (frag.distinct_columns ? "yes" : "no") << "\n";
  return (frag.doubly_even && frag.distinct_columns) ? 0 : 1;
}

int run_code_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("code verify: cannot open " + path);
  std::vector<std::string> lines;
  for (std::string s; std::getline(in, s);)
    if (!s.empty()) lines.push_back(s);
  edcert::BinaryCode L = edcert::BinaryCode::from_lines(lines);
  bool even = edcert::is_doubly_even(L);
  bool cols = edcert::has_distinct_columns(L);
  std::cout << "length " << L.length() << ", dimension " << L.dim() << "\n";
  std::cout << "doubly even: " << (even ? "yes" : "no") << "\n";
  std::cout << "columns distinct: " << (cols ? "yes" : "no") << "\n";
  return (even && cols) ? 0 : 1;
}

int run_code_search(unsigned n, double budget_secs, std::uint64_t seed) {
  if (budget_secs <= 0) throw std::invalid_argument("code search: budget must be positive");
  auto res = edcert::search_code(n, static_cast<std::uint64_t>(budget_secs * 1000.0), seed);
  std::cout << "length " << n << (res.exhaustive ? ", exhaustive" : ", budgeted")
            << (res.timed_out ? " (timed out)" : "") << ", seed " << res.seed << "\n";
  if (res.best) {
    std::cout << "best with distinct columns: dimension " << res.best->dim() << "\n";
    for (const auto& line : res.best->to_lines()) std::cout << line << "\n";
  } else {
    std::cout << "no doubly even code with distinct columns found\n";
  }
  if (res.best_plain && (!res.best || res.best_plain->dim() > res.best->dim()))
    std::cout << "ignoring column distinctness, best dimension " << res.best_plain->dim()
              << "\n";
  return 0;
}

// ---------------------------------------------------------------- xmn

int run_xmn(unsigned n, unsigned m, std::uint64_t seed) {
  std::optional<edcert::SymWitness> found = edcert::find_symmetric_witness(n, m, seed);
  if (!found) {
    std::cerr << "no witness met the residual and rank gates; try another --seed\n";
    return 1;
  }
  const edcert::SymWitness& w = *found;
  ordered_json j;
  j["n"] = w.n;
  j["m"] = w.m;
  j["shape"] = w.shape;
  j["exact"] = w.exact;
  if (w.exact) {
    ordered_json ex = ordered_json::array();
    for (const auto& c : w.exact_coords) ex.push_back(c.str());
    j["exact_coords"] = ex;
  }
  ordered_json coords = ordered_json::array();
  for (const auto& z : w.coords) coords.push_back({z.real(), z.imag()});
  j["coords"] = coords;
  j["residual"] = w.residual;
  j["jacobian_rank"] = w.jacobian_rank;
  j["stabilizer_rank"] = w.stabilizer_rank;
  j["seed"] = w.seed;
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------- tschirnhaus

// Polynomials in x with coefficients in Q(a_m, ..., a_n), parsed from a
// command line expression. Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := atom ('^' uint)?
//   atom   := uint | name | '(' expr ')' | '-' factor
// Division requires an x-free divisor.
class SubParser {
 public:
  SubParser(std::string src, const edcert::GeneralTrinomial& G) : src_(std::move(src)), G_(G) {}

  edcert::XPoly parse() {
    edcert::XPoly p = expr();
    skip();
    if (pos_ != src_.size())
      throw std::invalid_argument("substitution: trailing input at '" + src_.substr(pos_) + "'");
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    return p;
  }

 private:
  using RF = edcert::RatFunc;
  edcert::XPoly xconst(const RF& c) const { return {c}; }

  edcert::XPoly expr() {
    edcert::XPoly p = term();
    for (;;) {
      skip();
      if (eat('+'))
        p = add(p, term(), false);
      else if (eat('-'))
        p = add(p, term(), true);
      else
        return p;
    }
  }

  edcert::XPoly term() {
    edcert::XPoly p = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        p = mul(p, factor());
      } else if (eat('/')) {
        edcert::XPoly d = factor();
        if (d.size() != 1)
          throw std::invalid_argument("substitution: divisor must not involve x");
        if (d[0].is_zero()) throw std::invalid_argument("substitution: division by zero");
        for (auto& c : p) c = c / d[0];
      } else {
        return p;
      }
    }
  }

  edcert::XPoly factor() {
    edcert::XPoly base = atom();
    skip();
    if (!eat('^')) return base;
    unsigned long k = uinteger();
    if (k > 64) throw std::invalid_argument("substitution: exponent too large");
    edcert::XPoly out = xconst(RF::constant(G_.vars, 1));
    for (unsigned long i = 0; i < k; ++i) out = mul(out, base);
    return out;
  }

  edcert::XPoly atom() {
    skip();
    if (eat('(')) {
      edcert::XPoly p = expr();
      skip();
      if (!eat(')')) throw std::invalid_argument("substitution: expected ')'");
      return p;
    }
    if (eat('-')) {
      edcert::XPoly p = factor();
      RF neg = RF::constant(G_.vars, -1);
      for (auto& c : p) c = c * neg;
      return p;
    }
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      return xconst(RF::constant(G_.vars, edcert::Rat(static_cast<long long>(uinteger()))));
    if (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      std::string name;
      while (pos_ < src_.size() &&
             std::isalnum(static_cast<unsigned char>(src_[pos_])))
        name += src_[pos_++];
      if (name == "x") return {RF::constant(G_.vars, 0), RF::constant(G_.vars, 1)};
      if (name == "t")
        throw std::invalid_argument("substitution: t is reserved for the output variable");
      for (unsigned j = G_.m; j <= G_.n; ++j)
        if (name == "a" + std::to_string(j))
          return xconst(RF::variable(G_.vars, G_.a_index(j)));
      throw std::invalid_argument("substitution: unknown name " + name);
    }
    throw std::invalid_argument("substitution: unexpected input at position " +
                                std::to_string(pos_));
  }

  edcert::XPoly add(edcert::XPoly a, const edcert::XPoly& b, bool minus) {
    RF sign = RF::constant(G_.vars, minus ? -1 : 1);
    if (b.size() > a.size()) a.resize(b.size(), RF::constant(G_.vars, 0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i] * sign;
    return a;
  }

  edcert::XPoly mul(const edcert::XPoly& a, const edcert::XPoly& b) {
    edcert::XPoly out(a.size() + b.size() - 1, RF::constant(G_.vars, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
  }

  unsigned long uinteger() {
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) throw std::invalid_argument("substitution: expected an integer");
    return std::stoul(src_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string src_;
  const edcert::GeneralTrinomial& G_;
  std::size_t pos_ = 0;
};

int run_tschirnhaus(unsigned n, unsigned m, const std::string& sub) {
  if (sub.empty()) {
    edcert::ScalingReport rep = edcert::verify_scaling_identity(n, m);
    ordered_json j;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["identity_holds"] = rep.identity_holds;
    j["closed_form_holds"] = rep.closed_form_holds;
    j["t_support"] = rep.t_support;
    ordered_json coeffs;
    for (unsigned e : rep.t_support) coeffs["t^" + std::to_string(e)] = rep.coeffs[e].str();
    j["coefficients"] = coeffs;
    j["coefficient_trdeg"] = rep.coeff_trdeg;
    j["trdeg_matches"] = rep.trdeg_matches;
    std::cout << j.dump(2) << "\n";
    return (rep.identity_holds && rep.closed_form_holds && rep.trdeg_matches) ? 0 : 1;
  }
  edcert::GeneralTrinomial G = edcert::general_trinomial(n, m);
  edcert::XPoly g = SubParser(sub, G).parse();
  std::vector<edcert::RatFunc> b = edcert::tschirnhaus_minpoly(G.f, g, G.vars, G.t_index);
  ordered_json j;
  j["n"] = n;
  j["m"] = m;
  j["substitution"] = sub;
  ordered_json coeffs;
  for (std::size_t e = 0; e < b.size(); ++e)
    if (!b[e].is_zero()) coeffs["t^" + std::to_string(e)] = b[e].str();
  j["minpoly"] = coeffs;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificates for essential dimension lower bounds"};
  app.require_subcommand(1);

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "compute and verify the bound table");
  bounds->add_flag("--all", ba.all, "every built-in row");
  bounds->add_option("--family", ba.family, "one family: O, SO, PO, PGL, SL, Spin, G2, 2E7");
  bounds->add_option("--n", ba.n, "ambient dimension (O/SO/PO/Spin)");
  bounds->add_option("--p", ba.p, "prime (PGL/SL)");
  bounds->add_option("--r", ba.r, "rank exponent (PGL/SL)");
  bounds->add_option("--i", ba.i, "center exponent (SL)");
  bounds->add_option("--json", ba.json_path, "also write the machine record here");

  std::string sg_group;
  unsigned sg_e = 0;
  bool sg_verify = false;
  auto* subgroup = app.add_subcommand("subgroup", "build a witness subgroup presentation");
  subgroup->add_option("--group", sg_group, "abelian group, e.g. Z2^3 or Z2x Z4")->required();
  subgroup->add_option("--e", sg_e, "order of the central root of unity")->required();
  subgroup->add_flag("--verify-centralizer", sg_verify, "run the self-centralizing check");

  unsigned cf_n = 0;
  std::string cv_file;
  unsigned cs_n = 0;
  double cs_budget = 5.0;
  std::uint64_t cs_seed = 0xED5EA12C;
  auto* code = app.add_subcommand("code", "doubly even binary code tools");
  code->require_subcommand(1);
  auto* code_family = code->add_subcommand("family", "emit the built-in code for length n");
  code_family->add_option("--n", cf_n, "code length")->required();
  auto* code_verify = code->add_subcommand("verify", "check a basis file (rows of 0/1)");
  code_verify->add_option("file", cv_file, "path to basis rows")->required();
  auto* code_search = code->add_subcommand("search", "search for high-dimension codes");
  code_search->add_option("--n", cs_n, "code length")->required();
  code_search->add_option("--budget", cs_budget, "time budget in seconds");
  code_search->add_option("--seed", cs_seed, "search seed");

  unsigned x_n = 0, x_m = 0;
  std::uint64_t x_seed = 0x5EEDF00D;
  auto* xmn = app.add_subcommand("xmn", "symmetric power sum witness points");
  xmn->add_option("--n", x_n, "number of coordinates")->required();
  xmn->add_option("--m", x_m, "vanishing power sums p_1..p_{m-1}")->required();
  xmn->add_option("--seed", x_seed, "retry seed");

  unsigned t_n = 0, t_m = 0;
  std::string t_sub;
  auto* tsch = app.add_subcommand("tschirnhaus", "minimal polynomials under substitution");
  tsch->add_option("--n", t_n, "degree of the trinomial-shaped input")->required();
  tsch->add_option("--m", t_m, "lowest symbolic coefficient index")->required();
  tsch->add_option("--sub", t_sub, "substitution g(x); default checks the scaling identity");

  try {
    app.parse(argc, argv);
    if (*bounds) return run_bounds(ba);
    if (*subgroup) return run_subgroup(sg_group, sg_e, sg_verify);
    if (*code_family) return run_code_family(cf_n);
    if (*code_verify) return run_code_verify(cv_file);
    if (*code_search) return run_code_search(cs_n, cs_budget, cs_seed);
    if (*xmn) return run_xmn(x_n, x_m, x_seed);
    if (*tsch) return run_tschirnhaus(t_n, t_m, t_sub);
    return 2;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help and --version are successes
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  }
}
