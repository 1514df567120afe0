#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "partlab/cli.hpp"
#include "partlab/enumerate.hpp"
#include "partlab/io.hpp"
#include "partlab/series.hpp"
#include "partlab/stats.hpp"
#include "partlab/verify.hpp"

namespace py = pybind11;
using namespace partlab;

namespace {

py::int_ to_py(const BigInt& v) {
  PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list to_py(std::span<const BigInt> vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_py(v));
  return out;
}

py::list to_py(const StatTable& t) { return to_py(std::span<const BigInt>(t.values)); }

IntRange to_range(std::pair<unsigned, unsigned> r) { return {r.first, r.second}; }

py::object parse_json(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(_partlab, m) {
  m.doc() = "Exact partition statistics and q-series identity checks";

  // Series
  m.def("euler_product", [](std::size_t order) { return to_py(euler_product(order).coeffs()); },
        py::arg("order"));
  m.def("pentagonal_series",
        [](std::optional<std::size_t> ell, std::size_t order) {
          return to_py(pentagonal_series(ell, order).coeffs());
        },
        py::arg("ell"), py::arg("order"));
  m.def("gaussian_binomial",
        [](long long n, long long ell, std::size_t order) {
          return to_py(gaussian_binomial(n, ell, order).coeffs());
        },
        py::arg("n"), py::arg("ell"), py::arg("order"));
  m.def("theta_truncated",
        [](std::size_t ell, std::size_t order) { return to_py(theta_truncated(ell, order).coeffs()); },
        py::arg("ell"), py::arg("order"));

  // Series-backed statistic tables, entries n = 0..n_max.
  m.def("p", [](std::size_t n_max) { return to_py(partition_table(n_max)); }, py::arg("n_max"));
  m.def("Q", [](std::size_t n_max) { return to_py(distinct_table(n_max)); }, py::arg("n_max"));
  m.def("a_k", [](unsigned k, std::size_t n_max) { return to_py(a_k_series(k, n_max)); },
        py::arg("k"), py::arg("n_max"));
  m.def("a_kp",
        [](unsigned k, unsigned p, std::size_t n_max) { return to_py(a_kp_series(k, p, n_max)); },
        py::arg("k"), py::arg("p"), py::arg("n_max"));
  m.def("b_k", [](unsigned k, std::size_t n_max) { return to_py(b_k_series(k, n_max)); },
        py::arg("k"), py::arg("n_max"));
  m.def("c_k", [](unsigned k, std::size_t n_max) { return to_py(c_k_table(k, n_max)); },
        py::arg("k"), py::arg("n_max"));
  m.def("c", [](std::size_t n_max) { return to_py(c_table(n_max)); }, py::arg("n_max"));
  m.def("M_ell", [](unsigned ell, std::size_t n_max) { return to_py(M_ell_series(ell, n_max)); },
        py::arg("ell"), py::arg("n_max"));
  m.def("MP_ell", [](unsigned ell, std::size_t n_max) { return to_py(MP_ell_series(ell, n_max)); },
        py::arg("ell"), py::arg("n_max"));

  // Enumeration oracles
  m.def("partitions",
        [](unsigned n) {
          std::vector<std::vector<unsigned>> out;
          for (const auto& p : partitions(n)) out.push_back(p.parts);
          return out;
        },
        py::arg("n"));
  m.def("a_kp_enum", [](unsigned n, unsigned k, unsigned p) { return to_py(a_kp_enum(n, k, p)); },
        py::arg("n"), py::arg("k"), py::arg("p") = 0);
  m.def("b_k_enum", [](unsigned n, unsigned k) { return to_py(b_k_enum(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("M_ell_enum", [](unsigned n, unsigned ell) { return to_py(M_ell_enum(n, ell)); },
        py::arg("n"), py::arg("ell"));
  m.def("MP_ell_enum", [](unsigned n, unsigned ell) { return to_py(MP_ell_enum(n, ell)); },
        py::arg("n"), py::arg("ell"));
  m.def("c_subset_oracle", [](unsigned n, unsigned cap) { return to_py(c_subset_oracle(n, cap)); },
        py::arg("n"), py::arg("cap") = kDefaultSubsetCap);
  m.def("overpartition_counts",
        [](unsigned n, unsigned k) {
          return std::pair{overpartitions_P(n, k).size(), overpartitions_A(n, k).size()};
        },
        py::arg("n"), py::arg("k"));

  // Verification; reports come back as parsed JSON.
  m.def("verify_all",
        [](std::size_t n_max, std::pair<unsigned, unsigned> k, std::pair<unsigned, unsigned> ell,
           unsigned threads) {
          VerifyConfig cfg;
          cfg.n_max = n_max;
          cfg.k = to_range(k);
          cfg.ell = to_range(ell);
          cfg.threads = threads;
          std::string text;
          {
            py::gil_scoped_release release;
            text = reports_to_json(run_all(cfg));
          }
          return parse_json(text);
        },
        py::arg("n_max") = 60, py::arg("k") = std::pair{1U, 4U}, py::arg("ell") = std::pair{1U, 3U},
        py::arg("threads") = 1);
  m.def("find_bad_exponent_counterexample",
        [](std::size_t n_max, std::pair<unsigned, unsigned> ell) {
          const auto r = find_bad_exponent_counterexample(n_max, to_range(ell));
          py::dict out;
          out["witness"] = r.witness ? py::object(py::make_tuple(r.witness->first, r.witness->second))
                                     : py::object(py::none());
          out["first_failure_by_ell"] = r.first_failure_by_ell;
          out["corrected_passed"] = r.corrected.passed();
          out["uncorrected"] = parse_json(report_to_json(r.uncorrected).dump());
          return out;
        },
        py::arg("n_max") = 60, py::arg("ell") = std::pair{1U, 3U});

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
