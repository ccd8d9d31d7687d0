#include "isocubic/json_io.hpp"

#include <iomanip>
#include <sstream>

namespace isocubic {

Json scalar_to_json(const ScalarQ3& v) {
  return Json{{"p", rational_to_string(v.p())}, {"q", rational_to_string(v.q())}};
}

ScalarQ3 scalar_from_json(const Json& j) {
  return ScalarQ3(rational_from_string(j.at("p").get<std::string>()),
                  rational_from_string(j.at("q").get<std::string>()));
}

Json upsilon_to_json(const UpsilonTensor& u) {
  Json entries = Json::array();
  for (const auto& [t, v] : u.entries) {
    entries.push_back(Json{{"ijk", Json::array({t[0], t[1], t[2]})},
                           {"value", scalar_to_json(v)}});
  }
  return Json{{"n", u.n}, {"normalization", "iii-exact"}, {"entries", entries}};
}

UpsilonTensor upsilon_from_json(const Json& j) {
  UpsilonTensor u;
  u.n = j.at("n").get<int>();
  for (const auto& e : j.at("entries")) {
    const auto& ijk = e.at("ijk");
    u.set({ijk.at(0).get<int>(), ijk.at(1).get<int>(), ijk.at(2).get<int>()},
          scalar_from_json(e.at("value")));
  }
  return u;
}

Json identity_report_to_json(const IdentityReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"elapsed_ms", c.elapsed_ms}});
  }
  return Json{{"n", r.n}, {"checks", checks}, {"all_pass", r.all_pass()}};
}

Json conn_to_json(const ConnElement& c) {
  Json comps = Json::array();
  for (int a = 0; a < c.n; ++a) {
    for (int b = a + 1; b < c.n; ++b) {
      for (int l = 0; l < c.n; ++l) {
        const double v = c.at(a, b, l);
        if (v != 0.0) {
          comps.push_back(Json{{"pair", Json::array({a + 1, b + 1})},
                               {"frame", l + 1},
                               {"value", v}});
        }
      }
    }
  }
  return Json{{"n", c.n}, {"comps", comps}};
}

ConnElement conn_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  ConnElement c = ConnElement::zero(n);
  for (const auto& e : j.at("comps")) {
    const int a = e.at("pair").at(0).get<int>() - 1;
    const int b = e.at("pair").at(1).get<int>() - 1;
    const int l = e.at("frame").get<int>() - 1;
    if (a < 0 || b <= a || b >= n || l < 0 || l >= n) {
      throw std::invalid_argument("conn component out of range (need 1-based, a < b)");
    }
    c.at(a, b, l) = e.at("value").get<double>();
  }
  return c;
}

Json threeform_to_json(const ThreeFormD& t) {
  Json entries = Json::array();
  for (const auto& [idx, v] : t.entries) {
    entries.push_back(Json{{"ijk", Json::array({idx[0] + 1, idx[1] + 1, idx[2] + 1})},
                           {"value", v}});
  }
  return Json{{"n", t.n}, {"entries", entries}};
}

Json threeform_to_json(const ThreeFormQ& t) {
  Json entries = Json::array();
  for (const auto& [idx, v] : t.entries) {
    entries.push_back(Json{{"ijk", Json::array({idx[0], idx[1], idx[2]})},
                           {"value", scalar_to_json(v)}});
  }
  return Json{{"n", t.n}, {"entries", entries}};
}

Json twoform_to_json(const TwoFormQ& t) {
  Json entries = Json::array();
  for (const auto& [idx, v] : t.entries) {
    entries.push_back(Json{{"ij", Json::array({idx[0], idx[1]})},
                           {"value", scalar_to_json(v)}});
  }
  return Json{{"n", t.n}, {"entries", entries}};
}

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  if (s.mode == Mode::Exact) {
    for (const auto& v : s.basis_q) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(scalar_to_json(x));
      basis.push_back(row);
    }
  } else {
    for (int c = 0; c < s.basis_f.cols(); ++c) {
      Json row = Json::array();
      for (int r = 0; r < s.basis_f.rows(); ++r) row.push_back(s.basis_f(r, c));
      basis.push_back(row);
    }
  }
  Json j{{"mode", s.mode == Mode::Exact ? "exact" : "float"},
         {"ambient", s.ambient},
         {"dim", s.dim()},
         {"basis", basis}};
  if (s.mode == Mode::Float) j["rank_tol"] = s.rank_tol;
  return j;
}

Json decomposition_to_json(const DecompositionReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json jc{{"casimir_eigenvalue", c.casimir_eigenvalue}, {"dim", c.dim}};
    if (c.matched_irrep_dim) {
      jc["matched_irrep_dim"] = *c.matched_irrep_dim;
    } else {
      jc["matched_irrep_dim"] = nullptr;
    }
    comps.push_back(jc);
  }
  return Json{{"module", r.module_label}, {"total_dim", r.total_dim}, {"components", comps}};
}

std::string decomposition_to_table(const DecompositionReport& r) {
  std::ostringstream os;
  os << r.module_label << " (dim " << r.total_dim << "): ";
  auto dims = r.dims_desc();
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) os << " + ";
    os << "V" << dims[i];
  }
  os << "\n";
  os << std::left << std::setw(22) << "casimir eigenvalue" << std::setw(8) << "dim"
     << "matched irrep\n";
  for (const auto& c : r.components) {
    os << std::left << std::setw(22) << c.casimir_eigenvalue << std::setw(8) << c.dim
       << (c.matched_irrep_dim ? std::to_string(*c.matched_irrep_dim) : "-") << "\n";
  }
  return os.str();
}

Json split_to_json(const SplitResult& r) {
  return Json{{"gamma", conn_to_json(r.gamma)},
              {"torsion", threeform_to_json(r.torsion)},
              {"residual", conn_to_json(r.residual)},
              {"ambiguity_dim", r.ambiguity_dim},
              {"norms",
               Json{{"gamma", r.gamma.comps.norm()},
                    {"torsion", r.torsion.norm()},
                    {"residual", r.residual.comps.norm()}}}};
}

Json curvature_to_json(const CurvatureReport& r) {
  Json clusters = Json::array();
  for (const auto& c : r.clusters) {
    clusters.push_back(Json{{"value", c.value},
                            {"multiplicity", c.multiplicity},
                            {"within_point_spread", c.within_point_spread},
                            {"across_point_spread", c.across_point_spread}});
  }
  Json j{{"n", r.n},
         {"level", r.level},
         {"sample_count", r.sample_count},
         {"clusters", clusters},
         {"pass", r.pass}};
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

std::string curvature_to_csv(const CurvatureReport& r) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "sample";
  for (int i = 0; i < r.n; ++i) os << ",a" << (i + 1);
  const int hyp = r.n - 2;
  for (int i = 0; i < hyp; ++i) os << ",kappa" << (i + 1);
  os << "\n";
  for (std::size_t s = 0; s < r.sample_points.size(); ++s) {
    os << s;
    for (int i = 0; i < r.n; ++i) os << "," << r.sample_points[s][i];
    for (int i = 0; i < hyp; ++i) os << "," << r.sample_eigenvalues[s][i];
    os << "\n";
  }
  return os.str();
}

Json counts_to_json(int n, const ComponentCounts& c) {
  return Json{{"n", n},
              {"total", c.total},
              {"restricted", c.restricted},
              {"intersection_dim", c.intersection_dim}};
}

Json form_stabilizers_to_json(const FormStabilizerReport& r) {
  auto chk = [](const StabilizerCheck& c) {
    return Json{{"dim", c.dim},
                {"bracket_closed", c.bracket_closed},
                {"commutant_dim", c.commutant_dim},
                {"annihilates_form", c.annihilates_form}};
  };
  return Json{{"psi", chk(r.psi)},
              {"phi", chk(r.phi)},
              {"psi_exact_dim", r.psi_exact_dim},
              {"pass", r.pass}};
}

Json tau_span_to_json(const TauSpanReport& r) {
  return Json{{"span_dim", r.span_dim},
              {"bracket_closed", r.bracket_closed},
              {"commutant_dim", r.commutant_dim},
              {"equals_stabilizer", r.equals_stabilizer},
              {"pass", r.pass}};
}

Json v1_link_to_json(const V1LinkReport& r) {
  Json j{{"intersection_dim", r.intersection_dim},
         {"psi_prime_stab_dim", r.psi_prime_stab_dim},
         {"stab_contains_h8", r.stab_contains_h8},
         {"equals_catalog_psi", r.equals_catalog_psi},
         {"frame_found", r.frame_found},
         {"pass", r.pass}};
  if (r.frame_search_residual) {
    j["frame_search_residual"] = *r.frame_search_residual;
  } else {
    j["frame_search_residual"] = nullptr;
  }
  return j;
}

Json catalog_to_json(const FormCatalog& c) {
  Json taus = Json::array(), sigmas = Json::array();
  for (const auto& t : c.tau) taus.push_back(twoform_to_json(t));
  for (const auto& s : c.sigma) sigmas.push_back(twoform_to_json(s));
  return Json{{"tau", taus},
              {"psi", threeform_to_json(c.psi)},
              {"sigma", sigmas},
              {"phi", threeform_to_json(c.phi)}};
}

Json model_table_to_json(const std::vector<ModelEntry>& entries) {
  Json arr = Json::array();
  for (const auto& e : entries) {
    arr.push_back(Json{{"model", e.model},
                       {"total_algebra_dim", e.total_algebra_dim},
                       {"isotropy_dim", e.isotropy_dim},
                       {"space_dim", e.space_dim},
                       {"structure_group", e.structure_group}});
  }
  return arr;
}

std::string model_table_to_table(const std::vector<ModelEntry>& entries) {
  std::ostringstream os;
  os << std::left << std::setw(24) << "model" << std::setw(8) << "dim"
     << "structure group\n";
  for (const auto& e : entries) {
    os << std::left << std::setw(24) << e.model << std::setw(8) << e.space_dim
       << e.structure_group << "\n";
  }
  return os.str();
}

}  // namespace isocubic
