#include "isocubic/connection.hpp"
#include "isocubic/cubic_form.hpp"
#include "isocubic/forms.hpp"
#include "isocubic/isoparametric.hpp"
#include "isocubic/json_io.hpp"
#include "isocubic/magic_square.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace isocubic;

namespace {

// the JSON layer already defines the stable schemas; reuse it for python
py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case nlohmann::detail::value_t::null:
      return py::none();
    case nlohmann::detail::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::detail::value_t::number_integer:
    case nlohmann::detail::value_t::number_unsigned:
      return py::int_(j.get<long long>());
    case nlohmann::detail::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::detail::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::detail::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::detail::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = json_to_py(it.value());
      }
      return out;
    }
    default:
      return py::none();
  }
}

Mode parse_mode(const std::string& mode) {
  if (mode == "exact") return Mode::Exact;
  if (mode == "float") return Mode::Float;
  throw std::invalid_argument("mode must be 'exact' or 'float'");
}

ModuleKind parse_module(const std::string& module) {
  if (module == "vector") return ModuleKind::Vector;
  if (module == "lambda3") return ModuleKind::Lambda3;
  if (module == "conn") return ModuleKind::Conn;
  throw std::invalid_argument("module must be 'vector', 'lambda3' or 'conn'");
}

}  // namespace

PYBIND11_MODULE(_isocubic, m) {
  m.doc() = "exact and floating verification toolkit for the cubic "
            "isoparametric tensors in dimensions 5, 8, 14, 26";

  m.def("supported_dims", [] { return std::vector<int>{5, 8, 14, 26}; });

  m.def(
      "build_upsilon",
      [](int n) { return json_to_py(upsilon_to_json(upsilon_from_cubic(n))); },
      py::arg("n"), "exact tensor entries as {n, normalization, entries}");

  m.def(
      "verify_identities",
      [](int n) { return json_to_py(identity_report_to_json(verify_identities(upsilon_from_cubic(n)))); },
      py::arg("n"), "the five exact identity checks");

  m.def(
      "evaluate_cubic",
      [](int n, const std::vector<double>& a) {
        if (static_cast<int>(a.size()) != n) throw std::invalid_argument("point size != n");
        UpsilonFloat uf = UpsilonFloat::from(upsilon_from_cubic(n));
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = a[i];
        return uf.evaluate(v);
      },
      py::arg("n"), py::arg("a"));

  m.def(
      "stabilizer_dim",
      [](int n, const std::string& mode, double rank_tol) {
        return stabilizer_sym3(upsilon_from_cubic(n), parse_mode(mode), rank_tol).dim();
      },
      py::arg("n"), py::arg("mode") = "float", py::arg("rank_tol") = kDefaultRankTol);

  m.def(
      "stabilizer",
      [](int n, const std::string& mode, double rank_tol) {
        return json_to_py(subspace_to_json(
            stabilizer_sym3(upsilon_from_cubic(n), parse_mode(mode), rank_tol)));
      },
      py::arg("n"), py::arg("mode") = "float", py::arg("rank_tol") = kDefaultRankTol);

  m.def(
      "isotypic",
      [](int n, const std::string& module, double cluster_tol, bool slow) {
        Subspace h = stabilizer_sym3(upsilon_from_cubic(n), Mode::Float);
        return json_to_py(decomposition_to_json(
            isotypic(h, parse_module(module), n, cluster_tol, slow)));
      },
      py::arg("n"), py::arg("module") = "lambda3",
      py::arg("cluster_tol") = kDefaultClusterTol, py::arg("slow") = false);

  m.def(
      "restricted_component_counts",
      [](int n, double rank_tol) {
        return json_to_py(counts_to_json(n, restricted_component_counts(n, rank_tol)));
      },
      py::arg("n"), py::arg("rank_tol") = kDefaultRankTol);

  m.def(
      "defect_kernel_dim",
      [](int n, double rank_tol) {
        return nearly_integrable_kernel_dim(upsilon_from_cubic(n), rank_tol);
      },
      py::arg("n"), py::arg("rank_tol") = kDefaultRankTol);

  m.def(
      "split",
      [](py::dict conn_json) {
        Json j = Json::parse(py::str(py::module_::import("json").attr("dumps")(conn_json))
                                 .cast<std::string>());
        ConnElement c = conn_from_json(j);
        SplitContext ctx(upsilon_from_cubic(c.n));
        return json_to_py(split_to_json(split(c, ctx)));
      },
      py::arg("conn"),
      "split a connection element given as {n, comps: [{pair, frame, value}]}");

  m.def(
      "isoparametric",
      [](int n, double level, int samples, double tol, std::uint64_t seed) {
        UpsilonFloat uf = UpsilonFloat::from(upsilon_from_cubic(n));
        return json_to_py(curvature_to_json(verify_isoparametric(uf, level, samples, tol, seed)));
      },
      py::arg("n"), py::arg("level") = 0.0, py::arg("samples") = 20,
      py::arg("tol") = kDefaultCurvatureTol, py::arg("seed") = 0);

  m.def("forms_report", [](std::uint64_t seed) {
    Json j{{"stabilizers", form_stabilizers_to_json(verify_form_stabilizers())},
           {"tau_span", tau_span_to_json(verify_tau_span())},
           {"v1_link", v1_link_to_json(verify_v1_link(kDefaultRankTol, true, seed))},
           {"catalog", catalog_to_json(build_catalog())}};
    return json_to_py(j);
  }, py::arg("seed") = 0);

  m.def("magic_square", [] { return json_to_py(model_table_to_json(model_table())); });
}
