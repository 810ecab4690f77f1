#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "sympinv/io.hpp"
#include "sympinv/smallgroups.hpp"
#include "sympinv/verify.hpp"

namespace py = pybind11;
using namespace sympinv;

namespace {

constexpr std::uint64_t kOracleOrderLimit = 100000;

std::string classify_json(const std::string& element, std::uint64_t seed, std::uint64_t budget, bool use_oracle) {
  SymplecticElement phi = element_from_json(parse_json(element));
  std::unique_ptr<GroupTable> table;
  if (use_oracle && phi.field().is_prime() && phi.dim() > 0) {
    const int n = static_cast<int>(phi.dim() / 2);
    if (symplectic_group_order(n, phi.field().p()) <= kOracleOrderLimit)
      table = std::make_unique<GroupTable>(n, phi.field().p());
  }
  ClassifyOptions opt{budget, seed, table.get()};
  py::gil_scoped_release release;
  return to_json(classify(phi, opt)).dump();
}

std::string wall_json(const std::string& element) {
  return wall_report(element_from_json(parse_json(element))).dump();
}

std::string class_table(int n, std::int64_t q, std::uint64_t seed, unsigned jobs) {
  GroupTable g(n, q);
  py::gil_scoped_release release;
  return class_table_csv(conjugacy_classes(g, ClassifyOptions{default_search_budget(), seed, nullptr}, jobs));
}

py::dict suite(const std::string& name, int n, std::int64_t q, std::uint64_t seed, unsigned jobs, std::size_t trials) {
  SuiteOptions opt;
  opt.n = n;
  opt.q = q;
  opt.seed = seed;
  opt.jobs = jobs;
  opt.trials = trials;
  SuiteResult r;
  {
    py::gil_scoped_release release;
    r = run_suite(name, opt);
  }
  py::dict d;
  d["suite"] = r.suite;
  d["skipped"] = r.skipped;
  d["notice"] = r.notice;
  d["checks"] = r.checks;
  d["failures"] = r.failures;
  d["info"] = r.info;
  d["passed"] = r.passed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact classification of symplectic elements as products of involutions";
  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NotSymplectic>(m, "NotSymplectic", base.ptr());
  py::register_exception<UnsupportedField>(m, "UnsupportedField", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  m.def("classify_json", &classify_json, py::arg("element"), py::arg("seed") = 1,
        py::arg("budget") = default_search_budget(), py::arg("oracle") = true);
  m.def("wall_json", &wall_json, py::arg("element"));
  m.def("class_table_csv", &class_table, py::arg("n"), py::arg("q"), py::arg("seed") = 1, py::arg("jobs") = 1);
  m.def("run_suite", &suite, py::arg("name"), py::arg("n") = 0, py::arg("q") = 0, py::arg("seed") = 1,
        py::arg("jobs") = 1, py::arg("trials") = 0);
  m.def("suite_names", &suite_names);
  m.def("symplectic_group_order", &symplectic_group_order, py::arg("n"), py::arg("q"));
}
