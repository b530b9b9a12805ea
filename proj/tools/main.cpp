// Command-line surface for the unitriangular root-adjunction constructions.
// Exit codes: 0 success, 2 input error, 3 verification failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "utroots/embeddings.hpp"
#include "utroots/errors.hpp"
#include "utroots/kernels.hpp"
#include "utroots/nilpotency.hpp"
#include "utroots/roots.hpp"
#include "utroots/ut_matrix.hpp"
#include "utroots/wreath.hpp"

namespace {

using nlohmann::json;
using namespace utroots;

constexpr uint64_t kDefaultSeed = 12345;

struct Options {
  std::string format = "text";
  uint64_t seed = kDefaultSeed;
  size_t size_bound = kDefaultSizeBound;
};

json matrix_json(const UtMatrix& a) {
  json rows = json::array();
  for (uint32_t i = 1; i <= a.dim(); ++i) {
    json row = json::array();
    for (uint32_t j = 1; j <= a.dim(); ++j) row.push_back(a.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

UtMatrix read_matrix_arg(const std::string& path) {
  if (path.empty() || path == "-") return read_matrix(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_matrix(in);
}

// "k" on the first line, then q matrices in the text format.
WreathElement read_wreath_element(std::istream& in, uint32_t n, uint32_t p,
                                  uint32_t q) {
  uint32_t k = 0;
  if (!(in >> k)) throw ParseError("expected shift line \"k\"");
  if (k >= q) {
    throw ParseError("shift " + std::to_string(k) + " out of range for q = " +
                     std::to_string(q));
  }
  WreathElement w = wreath_identity(n, p, q);
  w.shift = k;
  for (uint32_t t = 0; t < q; ++t) {
    UtMatrix a = read_matrix(in);
    if (a.dim() != n || a.modulus() != p) {
      throw ParseError("coordinate " + std::to_string(t + 1) +
                       " must be " + std::to_string(n) + "x" +
                       std::to_string(n) + " over modulus " +
                       std::to_string(p));
    }
    w.base[t] = std::move(a);
  }
  return w;
}

void emit(const Options& opt, const json& doc, const std::string& text) {
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

// ---------------------------------------------------------------- embed --

int cmd_embed(const Options& opt, const std::string& kind, uint32_t n,
              uint32_t p, uint32_t s, const std::vector<uint32_t>& breakpoints,
              const std::string& apply_path) {
  GeneratorImages gi;
  if (kind == "simple") {
    if (breakpoints.empty()) {
      throw ParseError("--kind simple needs --breakpoints");
    }
    gi = simple_embedding(p, breakpoints);
  } else if (kind == "fr") {
    gi = phi_fr(n, p, s);
  } else if (kind == "lc") {
    gi = psi_lc(n, p, s);
  } else {
    gi = theta(n, p, s);
  }

  VerificationReport rep = verify_embedding(gi);

  std::optional<UtMatrix> applied;
  if (!apply_path.empty()) {
    UtMatrix a = read_matrix_arg(apply_path);
    applied = extend_hom(gi, a);
  }

  std::ostringstream text;
  text << "embedding " << gi.name << "\n";
  text << "n " << gi.n << "\np " << gi.p << "\n";
  if (kind != "simple") text << "s " << s << "\nq " << IndexScheme(n, p, s).q << "\n";
  text << "m " << gi.m << "\n";
  text << "verification " << (rep.ok() ? "pass" : "FAIL") << "\n";
  for (const std::string& w : rep.witnesses) text << "witness " << w << "\n";
  for (uint32_t k = 1; k < gi.n; ++k) {
    text << "image " << k << "\n" << format_matrix(gi.image_of_adjacent(k));
  }
  if (applied) text << "applied\n" << format_matrix(*applied);

  json doc;
  doc["embedding"] = gi.name;
  doc["n"] = gi.n;
  doc["p"] = gi.p;
  if (kind != "simple") {
    doc["s"] = s;
    doc["q"] = IndexScheme(n, p, s).q;
  }
  doc["m"] = gi.m;
  doc["verification"] = {{"relations", rep.relations_hold},
                         {"injective", rep.injective},
                         {"generator_orders", rep.generator_orders_ok},
                         {"witnesses", rep.witnesses}};
  json images = json::array();
  for (uint32_t k = 1; k < gi.n; ++k) {
    images.push_back(matrix_json(gi.image_of_adjacent(k)));
  }
  doc["images"] = std::move(images);
  if (applied) doc["applied"] = matrix_json(*applied);

  emit(opt, doc, text.str());
  return rep.ok() ? 0 : 3;
}

// ----------------------------------------------------------------- root --

int cmd_root(const Options& opt, const std::string& variant, uint32_t s,
             const std::string& input_path) {
  UtMatrix a = read_matrix_arg(input_path);
  RootWitness w = (variant == "fr") ? qth_root_fr(a, s) : qth_root_lc(a, s);
  RootCheck check = verify_root(w);

  std::ostringstream text;
  text << "variant " << w.variant << "\n";
  text << "n " << w.n << "\np " << w.p << "\ns " << w.s << "\nq " << w.q
       << "\nm " << w.m << "\n";
  text << "x\n" << format_matrix(w.x);
  for (size_t i = 0; i < w.factors.size(); ++i) {
    text << "factor " << (i + 1) << "\n" << format_matrix(w.factors[i]);
  }
  text << "target\n" << format_matrix(w.target);
  text << "verification " << (check.ok() ? "pass" : "FAIL") << "\n";
  if (!check.detail.empty()) text << "witness " << check.detail << "\n";

  json doc;
  doc["variant"] = w.variant;
  doc["n"] = w.n;
  doc["p"] = w.p;
  doc["s"] = w.s;
  doc["q"] = w.q;
  doc["m"] = w.m;
  doc["x"] = matrix_json(w.x);
  json factors = json::array();
  for (const UtMatrix& f : w.factors) factors.push_back(matrix_json(f));
  doc["factors"] = std::move(factors);
  doc["target"] = matrix_json(w.target);
  doc["verification"] = {{"power", check.power_ok},
                         {"factors", check.factors_ok},
                         {"witness", check.detail}};

  emit(opt, doc, text.str());
  return check.ok() ? 0 : 3;
}

// --------------------------------------------------------------- wreath --

int cmd_wreath(const Options& opt, uint32_t n, uint32_t p, uint32_t s,
               const std::string& element_path) {
  WreathEmbeddingData d = build_wreath_embedding(n, p, s);
  WreathConditionReport rep = verify_wreath_conditions(d);

  std::optional<UtMatrix> image;
  std::optional<WreathElement> element;
  if (!element_path.empty()) {
    std::ifstream in(element_path);
    if (!in) throw ParseError("cannot open " + element_path);
    element = read_wreath_element(in, n, p, d.scheme.q);
    image = tau(d, *element);
  }

  std::ostringstream text;
  text << "wreath embedding\n";
  text << "n " << n << "\np " << p << "\ns " << s << "\nq " << d.scheme.q
       << "\nm " << d.scheme.m << "\n";
  text << "conditions " << (rep.ok() ? "pass" : "FAIL") << "\n";
  text << "conjugation_chain " << (rep.conjugation_chain ? "pass" : "FAIL")
       << "\n";
  text << "families_embed " << (rep.families_embed ? "pass" : "FAIL") << "\n";
  text << "cross_commute " << (rep.cross_commute ? "pass" : "FAIL") << "\n";
  text << "centers_disjoint " << (rep.centers_disjoint ? "pass" : "FAIL")
       << "\n";
  for (const std::string& w : rep.witnesses) text << "witness " << w << "\n";
  text << "c\n" << format_matrix(d.c);
  for (uint32_t l = 0; l < d.scheme.q; ++l) {
    for (uint32_t k = 1; k < n; ++k) {
      text << "g " << (l + 1) << " " << k << "\n"
           << format_matrix(d.families[l].image_of_adjacent(k));
    }
  }
  for (uint32_t l = 0; l < d.scheme.q; ++l) {
    text << "z " << (l + 1) << "\n" << format_matrix(d.centers[l]);
  }
  if (image) text << "tau\n" << format_matrix(*image);

  json doc;
  doc["n"] = n;
  doc["p"] = p;
  doc["s"] = s;
  doc["q"] = d.scheme.q;
  doc["m"] = d.scheme.m;
  doc["conditions"] = {{"conjugation_chain", rep.conjugation_chain},
                       {"families_embed", rep.families_embed},
                       {"cross_commute", rep.cross_commute},
                       {"centers_disjoint", rep.centers_disjoint},
                       {"witnesses", rep.witnesses}};
  doc["c"] = matrix_json(d.c);
  json families = json::array();
  for (uint32_t l = 0; l < d.scheme.q; ++l) {
    json family = json::array();
    for (uint32_t k = 1; k < n; ++k) {
      family.push_back(matrix_json(d.families[l].image_of_adjacent(k)));
    }
    families.push_back(std::move(family));
  }
  doc["generators"] = std::move(families);
  json centers = json::array();
  for (const UtMatrix& z : d.centers) centers.push_back(matrix_json(z));
  doc["centers"] = std::move(centers);
  if (image) doc["tau"] = matrix_json(*image);

  emit(opt, doc, text.str());
  return rep.ok() ? 0 : 3;
}

// ---------------------------------------------------------------- class --

int cmd_class(const Options& opt, uint32_t n, uint32_t p, uint32_t s) {
  IndexScheme ix(n, p, s);
  // Brute force only fits when q * |UT_n|^q stays inside the bound.
  double log2_size = std::log2(static_cast<double>(ix.q)) +
                     static_cast<double>(ix.q) * (n * (n - 1) / 2) *
                         std::log2(static_cast<double>(p));
  bool brute = log2_size <= 62 &&
               std::pow(2.0, log2_size) <= static_cast<double>(opt.size_bound);
  WreathClassReport rep = wreath_class_check(n, p, s, brute, opt.size_bound);

  std::ostringstream text;
  text << "class of UT_" << n << "(F_" << p << ") wr C_" << ix.q << "\n";
  text << "formula " << rep.formula << "\n";
  text << "shield " << rep.shield << "\n";
  if (rep.brute) {
    text << "brute " << *rep.brute << "\n";
    text << "group_size " << rep.group_size << "\n";
    text << rep.formula << " = " << rep.shield << " = " << *rep.brute << "\n";
  } else {
    text << "brute skipped\n";
    text << rep.formula << " = " << rep.shield << " = skipped\n";
  }
  text << "agree " << (rep.agree ? "pass" : "FAIL") << "\n";

  json doc;
  doc["n"] = n;
  doc["p"] = p;
  doc["s"] = s;
  doc["q"] = ix.q;
  doc["formula"] = rep.formula;
  doc["shield"] = rep.shield;
  if (rep.brute) {
    doc["brute"] = *rep.brute;
    doc["group_size"] = rep.group_size;
  } else {
    doc["brute"] = nullptr;
  }
  doc["agree"] = rep.agree;

  emit(opt, doc, text.str());
  return rep.agree ? 0 : 3;
}

// --------------------------------------------------------------- verify --

struct SuiteResult {
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> witnesses;

  void add(const std::string& name, bool pass) { checks.push_back({name, pass}); }
  void witness(const std::string& w) { witnesses.push_back(w); }
  bool ok() const {
    for (const auto& [name, pass] : checks) {
      if (!pass) return false;
    }
    return true;
  }
};

void suite_field(SuiteResult& out) {
  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    bool ok = true;
    std::vector<Fp> all;
    for (uint32_t v = 0; v < p; ++v) all.push_back(Fp(v, p));
    Fp zero(0, p), one(1, p);
    for (Fp a : all) {
      ok = ok && a + zero == a && a * one == a && a + (-a) == zero;
      if (a != zero) ok = ok && a * a.inverse() == one;
      for (Fp b : all) {
        ok = ok && a + b == b + a && a * b == b * a;
        for (Fp c : all) {
          ok = ok && (a + b) + c == a + (b + c) &&
               (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
        }
      }
    }
    out.add("field axioms p=" + std::to_string(p), ok);
  }
}

void suite_relations(SuiteResult& out) {
  for (uint32_t p : {2u, 3u, 5u}) {
    for (uint32_t n = 2; n <= 6; ++n) {
      bool ok = true;
      for (uint32_t i = 1; i <= n && ok; ++i) {
        for (uint32_t j = i + 1; j <= n && ok; ++j) {
          UtMatrix tij = UtMatrix::transvection(n, p, i, j, 1);
          if (!tij.pow(p).is_identity()) ok = false;
          for (uint32_t k = 1; k <= n && ok; ++k) {
            for (uint32_t l = k + 1; l <= n && ok; ++l) {
              UtMatrix tkl = UtMatrix::transvection(n, p, k, l, 1);
              UtMatrix c = commutator(tij, tkl);
              if (j == k && i != l) {
                if (c != UtMatrix::transvection(n, p, i, l, 1)) ok = false;
              } else if (j != k && i != l && (i != k || j != l)) {
                if (l == i) continue;  // mirror of the chained case
                if (!c.is_identity()) ok = false;
              }
            }
          }
        }
      }
      out.add("relations n=" + std::to_string(n) + " p=" + std::to_string(p),
              ok);
    }
  }
}

void suite_embed(SuiteResult& out, uint32_t n, uint32_t p, uint32_t s) {
  for (const char* kind : {"fr", "lc", "theta"}) {
    GeneratorImages gi = std::string(kind) == "fr"   ? phi_fr(n, p, s)
                         : std::string(kind) == "lc" ? psi_lc(n, p, s)
                                                     : theta(n, p, s);
    VerificationReport rep = verify_embedding(gi);
    out.add(std::string("embedding ") + gi.name, rep.ok());
    for (const std::string& w : rep.witnesses) out.witness(w);
  }
}

void suite_roots(SuiteResult& out, const Options& opt, uint32_t n, uint32_t p,
                 uint32_t s) {
  std::mt19937_64 rng(opt.seed);
  IndexScheme ix(n, p, s);
  bool fr_ok = true, lc_ok = true;
  for (int trial = 0; trial < 50; ++trial) {
    UtMatrix a = random_unitriangular(n, p, rng);
    RootWitness fr = qth_root_fr(a, s);
    if (!verify_root(fr).ok() || fr.x.pow(ix.q) != phi_closed_form(ix, a)) {
      fr_ok = false;
    }
    RootWitness lc = qth_root_lc(a, s);
    if (!verify_root(lc).ok() || lc.x.pow(ix.q) != psi_closed_form(ix, a)) {
      lc_ok = false;
    }
  }
  out.add("roots fr", fr_ok);
  out.add("roots lc", lc_ok);

  bool tr_ok = true;
  for (uint32_t r : {1u, 2u, 3u}) {
    if (r % p == 0) continue;
    for (uint32_t i = 1; i < n; ++i) {
      for (uint32_t j = i + 1; j <= n; ++j) {
        for (uint32_t gamma = 0; gamma < p; ++gamma) {
          if (!verify_root(transvection_root(n, p, s, r, i, j, gamma)).ok()) {
            tr_ok = false;
          }
        }
      }
    }
  }
  out.add("roots transvection", tr_ok);
}

void suite_shift_blocks(SuiteResult& out, uint32_t p, uint32_t s) {
  ShiftBlockMatrices sb = shift_block_matrices(p, s);
  ShiftBlockReport rep = verify_shift_blocks(sb);
  out.add("row annihilation", rep.annihilation);
  out.add("shifted row sum", rep.shift_sum);
  out.add("block partition", rep.partition);
  if (!rep.detail.empty()) out.witness(rep.detail);

  bool multiples = true;
  for (const FpMatrix& mi : sb.M) {
    for (uint32_t j = 2; j <= sb.q; ++j) {
      bool found = false;
      for (uint32_t lam = 0; lam < p && !found; ++lam) {
        bool all = true;
        for (uint32_t i = 1; i <= sb.q; ++i) {
          if (mi.at(i, j) != static_cast<uint64_t>(mi.at(i, 1)) * lam % p) {
            all = false;
            break;
          }
        }
        found = all;
      }
      if (!found) multiples = false;
    }
  }
  out.add("column multiples", multiples);
}

void suite_equiv(SuiteResult& out, const Options& opt, uint32_t n, uint32_t p,
                 uint32_t s) {
  out.add("diagonal route matches fr",
          diagonal_route_matches_fr(n, p, s, 200, opt.seed));
}

void suite_wreath(SuiteResult& out, const Options& opt, uint32_t n, uint32_t p,
                  uint32_t s) {
  WreathEmbeddingData d = build_wreath_embedding(n, p, s);
  WreathConditionReport rep = verify_wreath_conditions(d);
  out.add("conjugation chain", rep.conjugation_chain);
  out.add("families embed", rep.families_embed);
  out.add("cross commute", rep.cross_commute);
  out.add("centers disjoint", rep.centers_disjoint);
  for (const std::string& w : rep.witnesses) out.witness(w);

  std::mt19937_64 rng(opt.seed);
  bool hom = true;
  for (int trial = 0; trial < 100; ++trial) {
    WreathElement x = wreath_identity(n, p, d.scheme.q);
    WreathElement y = x;
    x.shift = static_cast<uint32_t>(rng() % d.scheme.q);
    y.shift = static_cast<uint32_t>(rng() % d.scheme.q);
    for (uint32_t t = 0; t < d.scheme.q; ++t) {
      x.base[t] = random_unitriangular(n, p, rng);
      y.base[t] = random_unitriangular(n, p, rng);
    }
    if (tau(d, x * y) != tau(d, x) * tau(d, y)) hom = false;
  }
  out.add("tau multiplicative", hom);
}

int cmd_verify(const Options& opt, const std::string& suite, uint32_t n,
               uint32_t p, uint32_t s) {
  SuiteResult r;
  if (suite == "field") {
    suite_field(r);
  } else if (suite == "relations") {
    suite_relations(r);
  } else if (suite == "embed") {
    suite_embed(r, n, p, s);
  } else if (suite == "roots") {
    suite_roots(r, opt, n, p, s);
  } else if (suite == "shift-blocks") {
    suite_shift_blocks(r, p, s);
  } else if (suite == "equiv") {
    suite_equiv(r, opt, n, p, s);
  } else if (suite == "wreath") {
    suite_wreath(r, opt, n, p, s);
  } else if (suite == "all") {
    suite_field(r);
    suite_relations(r);
    suite_embed(r, n, p, s);
    suite_roots(r, opt, n, p, s);
    suite_shift_blocks(r, p, s);
    suite_equiv(r, opt, n, p, s);
    suite_wreath(r, opt, n, p, s);
  } else {
    throw ParseError("unknown suite " + suite);
  }

  std::ostringstream text;
  text << "suite " << suite << "\n";
  for (const auto& [name, pass] : r.checks) {
    text << "check " << name << " " << (pass ? "pass" : "FAIL") << "\n";
  }
  for (const std::string& w : r.witnesses) text << "witness " << w << "\n";
  text << "result " << (r.ok() ? "pass" : "FAIL") << "\n";

  json doc;
  doc["suite"] = suite;
  json checks = json::array();
  for (const auto& [name, pass] : r.checks) {
    checks.push_back({{"name", name}, {"pass", pass}});
  }
  doc["checks"] = std::move(checks);
  doc["witnesses"] = r.witnesses;
  doc["result"] = r.ok();

  emit(opt, doc, text.str());
  return r.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitriangular groups over prime fields: embeddings that "
               "adjoin p-power roots, wreath-product embeddings, and "
               "nilpotency-class checks"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("UTROOTS_SIZE_BOUND")) {
    opt.size_bound = std::strtoull(env, nullptr, 10);
  }
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for randomized suites")
      ->capture_default_str();
  app.add_option("--size-bound", opt.size_bound,
                 "Element budget for subgroup enumeration");

  uint32_t n = 3, p = 3, s = 1;

  auto add_nps = [&](CLI::App* cmd, bool with_n, bool with_s) {
    cmd->fallthrough();
    if (with_n) cmd->add_option("-n,--dim", n, "Source dimension");
    cmd->add_option("-p,--prime", p, "Field characteristic");
    if (with_s) cmd->add_option("-s,--exp", s, "Root exponent log: q = p^s");
  };

  std::string kind = "fr";
  std::vector<uint32_t> breakpoints;
  std::string apply_path;
  CLI::App* embed = app.add_subcommand(
      "embed", "Print generator images of an embedding");
  embed->add_option("--kind", kind, "Embedding family")
      ->check(CLI::IsMember({"simple", "fr", "lc", "theta"}));
  add_nps(embed, true, true);
  embed->add_option("--breakpoints", breakpoints,
                    "Target rows for --kind simple (comma separated)")
      ->delimiter(',');
  embed->add_option("--apply", apply_path,
                    "Matrix file to push through the embedding (- for stdin)");

  std::string variant = "fr";
  std::string root_input;
  CLI::App* root = app.add_subcommand(
      "root", "Construct x with x^(p^s) equal to the embedded input");
  root->fallthrough();
  root->add_option("--variant", variant, "Embedding the root lands in")
      ->check(CLI::IsMember({"fr", "lc"}));
  root->add_option("-s,--exp", s, "Root exponent log: q = p^s");
  root->add_option("input", root_input,
                   "Matrix file in the text format (- for stdin)");

  std::string element_path;
  CLI::App* wreath = app.add_subcommand(
      "wreath", "Wreath-product embedding data and conditions");
  wreath->alias("wreath-embed");
  add_nps(wreath, true, true);
  wreath->add_option("--element", element_path,
                     "Wreath element file: shift line, then q matrices");

  CLI::App* cls = app.add_subcommand(
      "class", "Nilpotency class: formula vs series data vs brute force");
  add_nps(cls, true, true);

  std::string suite;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify
      ->add_option("suite", suite,
                   "field | relations | embed | roots | shift-blocks | "
                   "equiv | wreath | all")
      ->required()
      ->check(CLI::IsMember({"field", "relations", "embed", "roots",
                             "shift-blocks", "equiv", "wreath", "all"}));
  add_nps(verify, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*embed) return cmd_embed(opt, kind, n, p, s, breakpoints, apply_path);
    if (*root) return cmd_root(opt, variant, s, root_input);
    if (*wreath) return cmd_wreath(opt, n, p, s, element_path);
    if (*cls) return cmd_class(opt, n, p, s);
    return cmd_verify(opt, suite, n, p, s);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonPrimeModulus& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
