// Command-line front end. Every output line is `key=value`, where the key ends
// at the first '=' and the value runs to the end of the line.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "wknots/alexander.hpp"
#include "wknots/embedded.hpp"
#include "wknots/expansion.hpp"

using namespace wk;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// Thrown for semantic usage errors discovered after argument parsing.
struct UsageError : Error {
  using Error::Error;
};

enum class InputKind { PD, Gauss, Braid };

struct Input {
  std::string label;
  InputKind kind = InputKind::PD;
  std::string text;
};

// A path, or the name of a bundled knot such as "3_1" when no such file exists.
Input load_input(const std::string& source, const std::string& format) {
  Input in;
  in.label = source;
  std::filesystem::path path(source);
  if (std::filesystem::exists(path)) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    in.text = ss.str();
  } else {
    bool found = false;
    for (const auto& [name, text] : embedded::knot_inventory())
      if (name == source) {
        in.text = std::string(text);
        found = true;
      }
    if (!found) throw UsageError("no such file or bundled knot: " + source);
    in.kind = InputKind::PD;
    return in;
  }
  std::string fmt = format;
  if (fmt.empty()) {
    const std::string ext = path.extension().string();
    if (ext == ".pd") fmt = "pd";
    else if (ext == ".gauss") fmt = "gauss";
    else if (ext == ".braid") fmt = "braid";
    else throw UsageError("cannot infer the format of " + source + "; pass --format");
  }
  if (fmt == "pd") in.kind = InputKind::PD;
  else if (fmt == "gauss") in.kind = InputKind::Gauss;
  else if (fmt == "braid") in.kind = InputKind::Braid;
  else throw UsageError("unknown format " + fmt);
  return in;
}

GaussDiagram knot_of(const Input& in) {
  switch (in.kind) {
    case InputKind::PD:
      return pd_to_gauss(parse_pd(in.text));
    case InputKind::Gauss:
      return parse_gauss(in.text);
    case InputKind::Braid:
      return braid_closure(parse_braid(in.text));
  }
  throw UsageError("unreachable input kind");
}

BraidWord braid_of(const Input& in) {
  if (in.kind != InputKind::Braid) throw UsageError(in.label + " is not a braid file");
  return parse_braid(in.text);
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

RelationSet flags_of(const std::string& text) {
  RelationSet f = parse_relation_set(text);
  for (Relation r : {Relation::SixT, Relation::TC, Relation::FourT, Relation::CC})
    if (f.contains(r)) throw UsageError("--flags accepts only ri, fi or none");
  return f;
}

// ---------------------------------------------------------------------------

int cmd_braid_eq(const std::string& a, const std::string& b, const std::string& group) {
  const BraidWord x = braid_of(load_input(a, "braid"));
  const BraidWord y = braid_of(load_input(b, "braid"));
  std::cout << "group=" << group << '\n';
  if (group == "w") {
    std::cout << "result=" << (braid_equal(x, y) ? "equal" : "unequal") << '\n';
  } else if (x == y) {
    std::cout << "result=equal\n";
  } else {
    std::cout << "result=" << (braid_distinguished(x, y) ? "unequal" : "inconclusive") << '\n';
  }
  return kOk;
}

int cmd_braid_act(const std::string& file) {
  const BraidWord b = braid_of(load_input(file, "braid"));
  const FreeAut psi = braid_action(b);
  std::cout << "n=" << b.n << '\n' << "word=" << braid_tokens(b) << '\n' << "skeleton=" << join(braid_skeleton(b)) << '\n';
  for (int i = 1; i <= psi.rank(); ++i) std::cout << "image[" << i << "]=" << psi.image(i).str() << '\n';
  const auto bc = aut_is_basis_conjugating(psi);
  std::cout << "basis_conjugating=" << (bc.conjugating ? "true" : "false") << '\n';
  if (bc.conjugating) {
    std::cout << "permutation=" << join(bc.permutation) << '\n';
    for (std::size_t i = 0; i < bc.conjugators.size(); ++i)
      std::cout << "conjugator[" << i + 1 << "]=" << bc.conjugators[i].str() << '\n';
  }
  return kOk;
}

int cmd_alexander(const std::string& file, const std::string& format, const std::string& method, int degree) {
  const Input in = load_input(file, format);
  const bool want_matrix = method != "fox";
  const bool want_fox = method != "matrix";
  if (want_fox && in.kind != InputKind::PD) throw UsageError("--method fox needs a PD code");
  const GaussDiagram k = knot_of(in);
  std::cout << "knot=" << in.label << '\n' << "crossings=" << k.crossings() << '\n' << "method=" << method << '\n';
  LaurentPoly matrix_poly, fox_poly;
  if (want_matrix) {
    const AlexanderValue v = alexander_matrix(k, degree);
    matrix_poly = v.normalized;
    std::cout << "raw_at_1=" << v.raw.evaluate_at_one().get_str() << '\n';
    std::cout << "series=" << v.series.str() << '\n';
  }
  if (want_fox) fox_poly = alexander_fox(parse_pd(in.text));
  const LaurentPoly& shown = want_matrix ? matrix_poly : fox_poly;
  std::cout << "polynomial=" << shown.term_list() << '\n' << "human=" << shown.str() << '\n';
  std::cout << "palindromic=" << (shown.is_palindromic() ? "true" : "false") << '\n';
  if (want_matrix && want_fox) {
    const bool agree = matrix_poly == fox_poly;
    std::cout << "agree=" << (agree ? "true" : "false") << '\n';
    if (!agree) {
      std::cout << "fox_polynomial=" << fox_poly.term_list() << '\n';
      return kCheckFailed;
    }
  }
  return kOk;
}

void print_coordinates(const WheelCoordinates& c) {
  for (const auto& [mono, q] : c) std::cout << "coord[" << mono.str() << "]=" << q.get_str() << '\n';
}

int cmd_zed(const std::string& file, const std::string& format, int degree, const std::string& basis,
            const std::string& flag_text, bool check_alexander) {
  const Input in = load_input(file, format);
  const RelationSet flags = flags_of(flag_text);
  std::cout << "input=" << in.label << '\n' << "degree=" << degree << '\n';
  if (in.kind == InputKind::Braid) {
    if (basis != "projected" || check_alexander)
      throw UsageError("braid expansions live on strands; use --basis projected without --check-alexander");
    const BraidWord b = parse_braid(in.text);
    const RelationSet rels{Relation::TC, Relation::FourT};
    const auto z = zed_braid(b, degree);
    std::cout << "skeleton=" << z.skeleton.str() << '\n' << "relations=" << rels.str() << '\n';
    std::cout << "permutation=" << join(z.permutation) << '\n';
    const auto p = project_expansion(z, rels);
    for (int m = 0; m <= degree; ++m) std::cout << "component[" << m << "]=" << join(p[m]) << '\n';
    return kOk;
  }
  const GaussDiagram k = knot_of(in);
  const auto z = zed_knot(k, degree);
  const RelationSet rels = knot_relations(flags);
  std::cout << "skeleton=long\n" << "relations=" << rels.str() << '\n' << "basis=" << basis << '\n';
  if (basis == "projected") {
    const auto p = project_expansion(z, rels);
    for (int m = 0; m <= degree; ++m) std::cout << "component[" << m << "]=" << join(p[m]) << '\n';
  }
  const WheelCoordinates got = wheels_reduce(z, flags);
  if (basis == "wheels") print_coordinates(got);
  if (check_alexander) {
    const WheelCoordinates want = predicted_from_alexander(k, degree, flags);
    const bool ok = got == want;
    std::cout << "alexander_check=" << (ok ? "pass" : "fail") << '\n';
    if (!ok) {
      for (const auto& [mono, q] : want) std::cout << "predicted[" << mono.str() << "]=" << q.get_str() << '\n';
      return kCheckFailed;
    }
  }
  return kOk;
}

Skeleton skeleton_of(const std::string& text) {
  if (text == "long") return Skeleton::long_strand();
  const std::string prefix = "strands:";
  if (text.rfind(prefix, 0) == 0) {
    const int n = std::stoi(text.substr(prefix.size()));
    if (n < 1) throw UsageError("strand count must be positive");
    return Skeleton::braid(n);
  }
  throw UsageError("--skeleton is 'long' or 'strands:<n>'");
}

int cmd_dims(const std::string& skeleton, int degree, const std::string& relations) {
  const Skeleton s = skeleton_of(skeleton);
  const RelationSet rels = parse_relation_set(relations);
  std::cout << "skeleton=" << s.str() << '\n' << "relations=" << rels.str() << '\n';
  for (int m = 0; m <= degree; ++m) {
    const auto q = quotient(s, m, rels);
    std::cout << "diagrams[" << m << "]=" << q->diagram_count() << '\n';
    std::cout << "relators[" << m << "]=" << q->relator_count() << '\n';
    std::cout << "dim[" << m << "]=" << q->dimension() << '\n';
  }
  return kOk;
}

int cmd_wheels(int degree, const std::string& flag_text, bool show_arrows) {
  const RelationSet flags = flags_of(flag_text);
  const RelationSet rels = knot_relations(flags);
  std::cout << "relations=" << rels.str() << '\n';
  bool ok = true;
  for (int m = 0; m <= degree; ++m) {
    const auto monos = wheel_monomial_basis(m, rels);
    std::string list;
    for (std::size_t i = 0; i < monos.size(); ++i) list += (i ? ", " : "") + monos[i].str();
    const std::size_t dim = quotient(Skeleton::long_strand(), m, rels)->dimension();
    std::cout << "monomials[" << m << "]=" << list << '\n';
    std::cout << "count[" << m << "]=" << monos.size() << '\n' << "dim[" << m << "]=" << dim << '\n';
    ok = ok && dim == monos.size();
  }
  if (show_arrows)
    for (int k = 1; k <= std::min(degree, kMaxWheel); ++k) std::cout << "w[" << k << "]=" << wheel_to_arrows(k).str() << '\n';
  std::cout << "agree=" << (ok ? "true" : "false") << '\n';
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// check: quick versions of the verification suites.

bool suite_relations(int degree) {
  const RelationSet rels{Relation::TC, Relation::FourT};
  for (int n = 2; n <= 3; ++n) {
    for (const auto& r : relation_table(n, true))
      if (braid_action(r.lhs) != braid_action(r.rhs)) return false;
    for (const auto& r : relation_table(n)) {
      const auto a = zed_braid(r.lhs, degree);
      const auto b = zed_braid(r.rhs, degree);
      if (a.permutation != b.permutation || project_expansion(a, rels) != project_expansion(b, rels)) return false;
    }
  }
  return true;
}

bool suite_moves(int degree, std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  const RelationSet ri = knot_relations(RelationSet{Relation::RI});
  const RelationSet fi = knot_relations(RelationSet{Relation::FI});
  for (int t = 0; t < cases; ++t) {
    GaussDiagram k = random_gauss_diagram(rng, t % 3);
    if (t % 3 == 0) k = insert_random_r3(rng, k);
    const bool with_r1 = t % 5 == 0;
    const GaussDiagram k2 = apply_move(k, random_legal_move(rng, k, with_r1));
    const RelationSet rels = with_r1 ? fi : ri;
    if (project_expansion(zed_knot(k, degree), rels) != project_expansion(zed_knot(k2, degree), rels)) return false;
  }
  return true;
}

bool suite_alexander() {
  for (const auto& [name, text] : embedded::knot_inventory()) {
    const PDCode pd = parse_pd(text);
    const AlexanderValue v = alexander_matrix(pd_to_gauss(pd), 2);
    if (v.normalized != alexander_fox(pd) || abs(v.raw.evaluate_at_one()) != 1 || !v.normalized.is_palindromic())
      return false;
  }
  return true;
}

bool suite_main(int degree) {
  for (const auto& [name, text] : embedded::knot_inventory()) {
    if (name != "0_1" && name != "3_1" && name != "4_1") continue;
    const GaussDiagram k = pd_to_gauss(parse_pd(text));
    for (auto flags : {RelationSet{}, RelationSet{Relation::RI}, RelationSet{Relation::FI}})
      if (wheels_reduce(zed_knot(k, degree), flags) != predicted_from_alexander(k, degree, flags)) return false;
  }
  return true;
}

int cmd_check(int degree, std::uint64_t seed, int cases) {
  std::cout << "degree=" << degree << '\n' << "seed=" << seed << '\n';
  bool all = true;
  auto report = [&](const char* name, bool ok) {
    std::cout << name << '=' << (ok ? "pass" : "fail") << '\n';
    all = all && ok;
  };
  report("relations", suite_relations(degree));
  report("moves", suite_moves(degree, seed, cases));
  report("alexander", suite_alexander());
  report("main_theorem", suite_main(degree));
  std::cout << "status=" << (all ? "pass" : "fail") << '\n';
  return all ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"w-knot invariants: braids, Alexander polynomials and arrow-diagram expansions"};
  app.require_subcommand(1);

  std::string a_file, b_file, group = "w";
  auto* eq = app.add_subcommand("braid-eq", "decide equality of two braids");
  eq->add_option("a", a_file, "first braid file")->required();
  eq->add_option("b", b_file, "second braid file")->required();
  eq->add_option("--group", group, "w (decided) or v (one-sided)")->check(CLI::IsMember({"w", "v"}));

  std::string file, format;
  auto* act = app.add_subcommand("braid-act", "print the free-group action of a braid");
  act->add_option("file", file, "braid file")->required();

  std::string method = "matrix";
  int degree = 5;
  auto* alex = app.add_subcommand("alexander", "Alexander polynomial of a long knot");
  alex->add_option("file", file, "knot file (.pd, .gauss, .braid) or bundled name")->required();
  alex->add_option("--method", method, "matrix, fox or both")->check(CLI::IsMember({"matrix", "fox", "both"}));
  alex->add_option("--degree", degree, "series truncation")->check(CLI::NonNegativeNumber);
  alex->add_option("--format", format, "pd, gauss or braid")->check(CLI::IsMember({"pd", "gauss", "braid"}));

  std::string basis = "wheels", flag_text = "ri";
  bool check_alexander = false;
  auto* zed = app.add_subcommand("zed", "truncated expansion of a knot or braid");
  zed->add_option("file", file, "knot or braid file, or bundled knot name")->required();
  zed->add_option("--degree", degree, "degree cap")->check(CLI::Range(0, kMaxWheel));
  zed->add_option("--basis", basis, "wheels or projected")->check(CLI::IsMember({"wheels", "projected"}));
  zed->add_option("--flags", flag_text, "none, ri or fi");
  zed->add_flag("--check-alexander", check_alexander, "compare with the Alexander prediction");
  zed->add_option("--format", format, "pd, gauss or braid")->check(CLI::IsMember({"pd", "gauss", "braid"}));

  std::string skeleton = "long", relations = "tc,4t";
  int dims_degree = 3;
  auto* dims = app.add_subcommand("dims", "quotient dimensions by degree");
  dims->add_option("--skeleton", skeleton, "long or strands:<n>");
  dims->add_option("--degree", dims_degree, "largest degree")->check(CLI::NonNegativeNumber);
  dims->add_option("--relations", relations, "comma-separated relation ids");

  bool show_arrows = false;
  int wheels_degree = 4;
  std::string wheel_flags = "none";
  auto* wheels = app.add_subcommand("wheels", "wheel-monomial basis against quotient dimensions");
  wheels->add_option("--degree", wheels_degree, "largest degree")->check(CLI::NonNegativeNumber);
  wheels->add_option("--flags", wheel_flags, "none, ri or fi");
  wheels->add_flag("--arrows", show_arrows, "print the arrow expansion of each wheel");

  int check_degree = 3, cases = 60;
  std::uint64_t seed = 1;
  auto* check = app.add_subcommand("check", "run the verification suites");
  check->add_option("--degree", check_degree, "degree cap")->check(CLI::Range(1, 5));
  check->add_option("--seed", seed, "random seed for the fuzz suite");
  check->add_option("--cases", cases, "fuzzed move cases")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eq) return cmd_braid_eq(a_file, b_file, group);
    if (*act) return cmd_braid_act(file);
    if (*alex) return cmd_alexander(file, format, method, degree);
    if (*zed) return cmd_zed(file, format, degree, basis, flag_text, check_alexander);
    if (*dims) return cmd_dims(skeleton, dims_degree, relations);
    if (*wheels) return cmd_wheels(wheels_degree, wheel_flags, show_arrows);
    if (*check) return cmd_check(check_degree, seed, cases);
  } catch (const ParseError& e) {
    std::cerr << "error=parse\nline=" << e.line() << "\ncolumn=" << e.column() << "\nmessage=" << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error=usage\nmessage=" << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error=input\nmessage=" << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
