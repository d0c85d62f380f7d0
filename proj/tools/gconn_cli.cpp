#include "CLI11.hpp"

#include "gconn/report.hpp"
#include "gconn/speclang.hpp"
#include "gconn/strata.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gconn;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kUndetermined = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct CommonFlags {
  std::string format;
  long orbit_bound = -1;
  std::string b3_mode;

  void apply(SpecDocument& doc) const {
    if (!format.empty()) doc.format = format;
    if (orbit_bound >= 0) doc.options.orbit_bound = static_cast<size_t>(orbit_bound);
    if (b3_mode == "d4") doc.options.b3_via_d4 = true;
    if (b3_mode == "b3") doc.options.b3_via_d4 = false;
  }
};

void add_common(CLI::App* cmd, CommonFlags& fl) {
  cmd->add_option("--format", fl.format, "output format")
      ->check(CLI::IsMember({"human", "machine"}));
  cmd->add_option("--orbit-bound", fl.orbit_bound, "Weyl orbit enumeration cap");
  cmd->add_option("--b3-mode", fl.b3_mode, "conjugacy test for B3 inputs")
      ->check(CLI::IsMember({"d4", "b3"}));
}

int run_analyze(const std::string& path, const CommonFlags& fl) {
  SpecDocument doc = parse_spec_document(read_input(path));
  fl.apply(doc);
  Report rep = build_report(doc.spec, doc.options);
  std::cout << (doc.format == "machine" ? render_machine(rep) : render_human(rep));
  return rep.verdict.group ? kOk : kUndetermined;
}

int run_jordan(const std::string& path, const CommonFlags& fl) {
  SpecDocument doc = parse_spec_document(read_input(path));
  fl.apply(doc);
  if (doc.spec.kind != ConnectionKind::CoxeterFormal || !doc.spec.formal_type) {
    std::cerr << "error: jordan needs a coxeter spec with coefficient lists\n";
    return kInputError;
  }
  JordanForm jf = to_jordan(*doc.spec.formal_type);
  LocalGaloisData local = local_galois_group(jf);
  auto coords = jordan_term_coordinates(jf);
  std::cout << "slope: " << rational_to_string(slope(*doc.spec.formal_type)) << "\n";
  std::cout << "cover order b = " << jf.b
            << (jf.adjoint_normalisation ? " (adjoint normalisation)" : "") << "\n";
  std::cout << "theta order: " << jf.theta_order << "\n";
  for (size_t k = 0; k < jf.terms.size(); ++k) {
    std::cout << "term " << jf.terms[k].first << "/" << jf.base->h << " : "
              << lie_to_string(jf.terms[k].second) << "  (coordinates: [";
    for (size_t j = 0; j < coords[k].size(); ++j)
      std::cout << (j ? ", " : "") << coords[k][j].to_string();
    std::cout << "])\n";
  }
  std::cout << "local model: dim H = " << local.dim_h
            << ", theta order = " << local.theta_order << "\n";
  return kOk;
}

int run_moduli(const std::string& path_a, const std::string& path_b) {
  SpecDocument da = parse_spec_document(read_input(path_a));
  SpecDocument db = parse_spec_document(read_input(path_b));
  if (!da.spec.formal_type || !db.spec.formal_type) {
    std::cerr << "error: moduli needs two coxeter specs with coefficient lists\n";
    return kInputError;
  }
  const FormalType& a = *da.spec.formal_type;
  const FormalType& b = *db.spec.formal_type;
  if (!(a.base->type == b.base->type) || a.r != b.r) {
    std::cerr << "error: specs have different groups or depths\n";
    return kInputError;
  }
  std::optional<int> witness;
  for (int k = 0; k < a.base->h; ++k)
    if (formal_types_equal(mu_h_action(a, k), b)) {
      witness = k;
      break;
    }
  if (witness)
    std::cout << "equivalent (k = " << *witness << ")\n";
  else
    std::cout << "inequivalent\n";
  auto print_canonical = [](const char* tag, const FormalType& ft) {
    FormalType rep = canonical_orbit_representative(ft);
    std::cout << "canonical " << tag << ":";
    for (const auto& [i, v] : rep.coeffs)
      std::cout << " [" << i << "] " << lie_to_string(v) << ";";
    std::cout << "\n";
  };
  print_canonical("a", a);
  print_canonical("b", b);
  return kOk;
}

int run_classify(const std::string& token, bool table_only) {
  auto st = parse_simple_type(token);
  if (!st) {
    std::cerr << "error: '" << token << "' is not a crystallographic simple type\n";
    return kInputError;
  }
  std::vector<SubgroupType> table = table1_lookup(*st);
  std::cout << "maximal-degree subgroups of " << st->name() << ":\n";
  for (const auto& s : table)
    std::cout << "  " << s.type.name() << "  [" << realisation_name(s) << "]\n";
  if (table_only) return kOk;

  auto [derived, traces] = derive_maximal_degree_subgroups(*st);
  std::cout << "derivation traces:\n";
  for (const auto& tr : traces)
    std::cout << "  " << tr.candidate.name() << ": " << elimination_rule_name(tr.rule) << "\n";
  auto name_set = [](const std::vector<SubgroupType>& v) {
    std::vector<std::string> out;
    for (const auto& s : v) out.push_back(s.type.name());
    std::sort(out.begin(), out.end());
    return out;
  };
  if (name_set(derived) != name_set(table)) {
    std::cerr << "error: derivation disagrees with the classification table\n";
    return kUndetermined;
  }
  std::cout << "derivation agrees with the table\n";
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of Coxeter G-connections"};
  app.require_subcommand(1);

  std::string path = "-", path_b, token;
  CommonFlags fl;

  auto* analyze_cmd = app.add_subcommand("analyze", "full Galois analysis of a connection");
  analyze_cmd->add_option("input", path, "spec document ('-' for stdin)");
  add_common(analyze_cmd, fl);

  auto* jordan_cmd = app.add_subcommand("jordan", "Jordan form of a formal type");
  jordan_cmd->add_option("input", path, "spec document ('-' for stdin)");
  add_common(jordan_cmd, fl);

  auto* moduli_cmd = app.add_subcommand("moduli", "mu_h equivalence of two formal types");
  moduli_cmd->add_option("a", path, "first spec document")->required();
  moduli_cmd->add_option("b", path_b, "second spec document")->required();

  auto* classify_cmd = app.add_subcommand("classify", "subgroup table with derivation traces");
  classify_cmd->add_option("group", token, "simple type token, e.g. E6")->required();

  auto* table_cmd = app.add_subcommand("table", "subgroup table only");
  table_cmd->add_option("group", token, "simple type token, e.g. E6")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze_cmd)) return run_analyze(path, fl);
    if (app.got_subcommand(jordan_cmd)) return run_jordan(path, fl);
    if (app.got_subcommand(moduli_cmd)) return run_moduli(path, path_b);
    if (app.got_subcommand(classify_cmd)) return run_classify(token, false);
    if (app.got_subcommand(table_cmd)) return run_classify(token, true);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
