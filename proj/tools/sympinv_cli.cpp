// sympinv: classify symplectic elements as products of (skew-)involutions.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "sympinv/io.hpp"
#include "sympinv/smallgroups.hpp"
#include "sympinv/verify.hpp"

using namespace sympinv;

namespace {

enum Exit { ok = 0, verify_failed = 1, parse_failed = 2, not_symplectic = 3, unsupported_field = 4, over_budget = 5 };

// Groups at most this large are enumerated to serve as a conjugacy oracle.
constexpr std::uint64_t kOracleOrderLimit = 100000;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ParseError("cannot write " + out);
  f << text;
}

SymplecticElement load_element(const Json& doc, const std::string& form) {
  const Json& src = doc.contains("input") ? doc.at("input") : doc;
  SymplecticElement e = element_from_json(src);
  if (form == "standard" && !e.space().is_standard())
    return SymplecticElement::standard(e.matrix());
  return e;
}

std::unique_ptr<GroupTable> oracle_for(const SymplecticElement& e) {
  const Field& f = e.field();
  if (!f.is_prime() || e.dim() == 0) return nullptr;
  const int n = static_cast<int>(e.dim() / 2);
  if (symplectic_group_order(n, f.p()) > kOracleOrderLimit) return nullptr;
  return std::make_unique<GroupTable>(n, f.p());
}

struct Recheck {
  std::size_t witnesses = 0, failures = 0;
};

// Re-multiplies every witness embedded in a report.
Recheck recheck_report(const SymplecticElement& phi, const Json& report) {
  Recheck r;
  auto visit = [&](const Json& d) {
    if (!d.is_object() || !d.contains("witness") || d.at("witness").is_null()) return;
    ++r.witnesses;
    if (!verify_witness(phi, witness_from_json(phi.field(), d.at("witness")))) ++r.failures;
  };
  for (const char* key : {"reversible_sp", "bireflectional", "two_skew", "inv_skew", "negating_sp",
                          "psp_reversible_not_bireflectional"})
    if (report.contains(key)) visit(report.at(key));
  return r;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  for (const auto& [key, value] : report.items()) {
    if (value.is_object() && value.contains("verdict")) {
      os << key << ": " << value.at("verdict").get<std::string>() << " (" << value.at("method").get<std::string>()
         << ", " << value.at("ambient").get<std::string>() << ")";
      if (value.contains("note")) os << " " << value.at("note").get<std::string>();
      os << "\n";
    } else if (!value.is_object()) {
      os << key << ": " << value.dump() << "\n";
    }
  }
  return os.str();
}

int cmd_classify(const std::string& path, const std::string& form, const std::string& out, const std::string& format,
                 std::uint64_t seed, std::uint64_t budget, bool recheck, bool use_oracle) {
  Json doc = parse_json(read_file(path));
  SymplecticElement phi = load_element(doc, form);
  if (recheck && doc.contains("report")) {
    Recheck r = recheck_report(phi, doc.at("report"));
    Json result{{"witnesses", r.witnesses}, {"failures", r.failures}};
    emit(result.dump(2) + "\n", out);
    return r.failures == 0 ? ok : verify_failed;
  }
  std::unique_ptr<GroupTable> table = use_oracle ? oracle_for(phi) : nullptr;
  ClassifyOptions opt{budget, seed, table.get()};
  Json report = to_json(classify(phi, opt));
  Json result{{"seed", seed}, {"budget", budget}, {"oracle", table != nullptr}, {"input", to_json(phi)},
              {"report", report}};
  int code = ok;
  if (recheck) {
    Recheck r = recheck_report(phi, report);
    result["recheck"] = {{"witnesses", r.witnesses}, {"failures", r.failures}};
    if (r.failures) code = verify_failed;
  }
  emit(format == "text" ? render_text(report) : result.dump(2) + "\n", out);
  return code;
}

int cmd_wall(const std::string& path, const std::string& form, const std::string& out, const std::string& format) {
  SymplecticElement phi = load_element(parse_json(read_file(path)), form);
  Json w = wall_report(phi);
  if (format == "text") {
    std::ostringstream os;
    os << "dim Bahn: " << w.at("gram_omega").at("rows").size() << "\ntheta: " << w.at("theta").dump()
       << "\ntheta_class: " << w.at("theta_class").dump() << "\ntheta_is_square: " << w.at("theta_is_square").dump()
       << "\n";
    if (!w.at("antitriangular").is_null())
      os << "antitriangular conditions: " << w.at("antitriangular").at("conditions_hold").dump() << "\n";
    emit(os.str(), out);
  } else {
    emit(Json{{"input", to_json(phi)}, {"wall", w}}.dump(2) + "\n", out);
  }
  return ok;
}

int cmd_enumerate(int n, std::int64_t q, const std::string& out, const std::string& format, unsigned jobs,
                  std::uint64_t seed, std::uint64_t budget) {
  try {
    Field::prime(q);
  } catch (const DomainError& e) {
    throw UnsupportedField(e.what());
  }
  if (symplectic_group_order(n, q) > kGroupElementCap)
    throw BudgetExceeded("Sp(" + std::to_string(2 * n) + "," + std::to_string(q) + ") has more than " +
                         std::to_string(kGroupElementCap) + " elements");
  GroupTable g(n, q);
  auto classes = conjugacy_classes(g, ClassifyOptions{budget, seed, nullptr}, jobs);
  if (format == "json") {
    Json rows = Json::array();
    for (const auto& c : classes)
      rows.push_back({{"class_id", c.class_id},
                      {"rep", serialize_compact(c.representative)},
                      {"size", c.size},
                      {"order_of_element", c.element_order},
                      {"elementary_divisors", elementary_divisors_to_string(c.elementary_divisors)},
                      {"is_involution", c.is_involution},
                      {"is_skew_involution", c.is_skew_involution},
                      {"reversible", to_string(c.reversible)},
                      {"bireflectional", to_string(c.bireflectional)},
                      {"two_skew", to_string(c.two_skew)},
                      {"inv_skew", to_string(c.inv_skew)},
                      {"psp_rev_not_biref", to_string(c.psp_rev_not_biref)}});
    Json doc{{"n", n}, {"q", q}, {"seed", seed}, {"order", g.order()}, {"classes", rows}};
    emit(doc.dump(2) + "\n", out);
  } else {
    emit("# n=" + std::to_string(n) + " q=" + std::to_string(q) + " seed=" + std::to_string(seed) + "\n" +
             class_table_csv(classes),
         out);
  }
  return ok;
}

int cmd_verify(const std::vector<std::string>& suites, const SuiteOptions& opt, const std::string& out,
               const std::string& format) {
  Json results = Json::array();
  std::ostringstream text;
  bool all = true;
  for (const auto& name : suites) {
    SuiteResult r = run_suite(name, opt);
    all = all && r.passed();
    const std::string status = r.skipped ? "skipped" : (r.passed() ? "pass" : "fail");
    std::cerr << name << ": " << status << " (" << r.seconds << " s)\n";
    Json j{{"suite", name}, {"status", status}, {"checks", r.checks}, {"failures", r.failures}, {"info", r.info}};
    if (!r.notice.empty()) j["notice"] = r.notice;
    results.push_back(j);
    text << name << ": " << status << ", " << r.checks << " checks, " << r.failures.size() << " failures\n";
    if (!r.notice.empty()) text << "  " << r.notice << "\n";
    for (const auto& f : r.failures) text << "  FAIL " << f << "\n";
    for (const auto& i : r.info) text << "  note " << i << "\n";
  }
  Json doc{{"seed", opt.seed}, {"n", opt.n}, {"q", opt.q}, {"trials", opt.trials}, {"passed", all},
           {"results", results}};
  emit(format == "text" ? text.str() : doc.dump(2) + "\n", out);
  return all ? ok : verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Products of involutions and skew-involutions in symplectic groups"};
  app.require_subcommand(1);

  std::uint64_t seed = 1, budget = default_search_budget();
  std::string out, format;

  std::string path, form = "file";
  bool recheck = false, no_oracle = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one element and attach witnesses");
  classify_cmd->add_option("file", path, "Element JSON, or - for stdin")->required();
  classify_cmd->add_option("--form", form, "Form to use")->check(CLI::IsMember({"standard", "file"}));
  classify_cmd->add_option("--out", out, "Output path");
  classify_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  classify_cmd->add_option("--seed", seed, "Random seed");
  classify_cmd->add_option("--budget", budget, "Search budget");
  classify_cmd->add_flag("--recheck", recheck, "Re-multiply all witnesses");
  classify_cmd->add_flag("--no-oracle", no_oracle, "Do not enumerate small groups");

  auto* wall_cmd = app.add_subcommand("wall", "Wall form and antitriangular normal form");
  wall_cmd->add_option("file", path, "Element JSON, or - for stdin")->required();
  wall_cmd->add_option("--form", form, "Form to use")->check(CLI::IsMember({"standard", "file"}));
  wall_cmd->add_option("--out", out, "Output path");
  wall_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  int n = 1;
  std::int64_t q = 3;
  unsigned jobs = 1;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Conjugacy class table of Sp(2n, q)");
  enumerate_cmd->add_option("--n", n, "Half dimension")->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--q", q, "Field order")->required();
  enumerate_cmd->add_option("--out", out, "Output path");
  enumerate_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  enumerate_cmd->add_option("--jobs", jobs, "Worker threads");
  enumerate_cmd->add_option("--seed", seed, "Random seed");
  enumerate_cmd->add_option("--budget", budget, "Search budget");

  std::string suite;
  SuiteOptions sopt;
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "Suite name or all")->required()->check(CLI::IsMember(choices));
  verify_cmd->add_option("--n", sopt.n, "Half dimension of the group");
  verify_cmd->add_option("--q", sopt.q, "Field order");
  verify_cmd->add_option("--jobs", sopt.jobs, "Worker threads");
  verify_cmd->add_option("--trials", sopt.trials, "Random trials");
  verify_cmd->add_option("--seed", sopt.seed, "Random seed");
  verify_cmd->add_option("--budget", sopt.budget, "Search budget");
  verify_cmd->add_option("--out", out, "Output path");
  verify_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parse_failed;
  }

  try {
    if (*classify_cmd) return cmd_classify(path, form, out, format, seed, budget, recheck, !no_oracle);
    if (*wall_cmd) return cmd_wall(path, form, out, format);
    if (*enumerate_cmd) return cmd_enumerate(n, q, out, format, jobs, seed, budget);
    std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    return cmd_verify(suites, sopt, out, format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse_failed;
  } catch (const NotSymplectic& e) {
    std::cerr << "not symplectic: " << e.what() << "\n";
    return not_symplectic;
  } catch (const UnsupportedField& e) {
    std::cerr << "unsupported field: " << e.what() << "\n";
    return unsupported_field;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return over_budget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return parse_failed;
  }
}
