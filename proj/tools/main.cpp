#include "isocubic/cubic_form.hpp"
#include "isocubic/json_io.hpp"

#include <CLI11.hpp>
#include <Eigen/Core>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace isocubic;

struct GlobalOpts {
  std::string output;  // empty = stdout
  std::string format = "json";
  int threads = 0;
};

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.output.empty() || g.output == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(g.output);
    if (!out) throw std::runtime_error("cannot open output file " + g.output);
    out << text;
  }
}

void emit_json(const GlobalOpts& g, const Json& j) { emit(g, j.dump(2)); }

int require_supported_dim(int n) {
  if (!is_supported_dim(n)) {
    std::cerr << "error: --dim must be one of 5, 8, 14, 26\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for the cubic isoparametric tensors in "
               "dimensions 5, 8, 14, 26"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--output,-o", g.output, "output path (default stdout)");
  app.add_option("--threads", g.threads, "internal parallelism (0 = hardware)");

  int dim = 5;
  std::string mode = "float";
  std::string profile = "default";
  std::string module = "lambda3";
  std::uint64_t seed = 0;
  double rank_tol = kDefaultRankTol;
  double cluster_tol = kDefaultClusterTol;
  double curvature_tol = kDefaultCurvatureTol;
  double level = 0.0;
  int samples = 20;
  bool with_kernel = false;
  bool no_frame_search = false;
  std::string input;

  auto* cmd_build = app.add_subcommand("build-upsilon", "construct the exact tensor");
  cmd_build->add_option("--dim", dim, "point dimension")->required();
  cmd_build->add_option("--format", g.format, "json");

  bool with_timings = false;
  auto* cmd_verify = app.add_subcommand("verify", "run the exact identity suite");
  cmd_verify->add_option("--dim", dim)->required();
  cmd_verify->add_flag("--timings", with_timings,
                       "include measured per-check times (breaks byte-identical output)");

  auto* cmd_stab = app.add_subcommand("stabilizer", "stabilizer subalgebra of the tensor");
  cmd_stab->add_option("--dim", dim)->required();
  cmd_stab->add_option("--mode", mode, "exact|float");
  cmd_stab->add_option("--profile", profile, "default|slow");
  cmd_stab->add_option("--rank-tol", rank_tol);

  bool with_commutants = false;
  auto* cmd_dec = app.add_subcommand("decompose", "isotypic decomposition of a module");
  cmd_dec->add_option("--dim", dim)->required();
  cmd_dec->add_option("--module", module, "vector|lambda3|conn");
  cmd_dec->add_option("--profile", profile, "default|slow");
  cmd_dec->add_option("--cluster-tol", cluster_tol);
  cmd_dec->add_option("--rank-tol", rank_tol);
  cmd_dec->add_option("--format", g.format, "json|table");
  cmd_dec->add_flag("--commutants", with_commutants,
                    "add per-component commutant dimensions (modules of dim <= 400)");

  auto* cmd_counts = app.add_subcommand("counts", "restricted component counts");
  cmd_counts->add_option("--dim", dim)->required();
  cmd_counts->add_option("--rank-tol", rank_tol);
  cmd_counts->add_option("--profile", profile, "default|slow");
  cmd_counts->add_flag("--kernel", with_kernel, "also compute the defect kernel dimension");

  auto* cmd_split = app.add_subcommand("split", "characteristic split of a connection element");
  cmd_split->add_option("--dim", dim)->required();
  cmd_split->add_option("--input,-i", input, "connection JSON path, or - for stdin")->required();
  cmd_split->add_option("--rank-tol", rank_tol);

  auto* cmd_iso = app.add_subcommand("isoparametric", "principal-curvature verification");
  cmd_iso->add_option("--dim", dim)->required();
  cmd_iso->add_option("--level", level, "level c of the cubic, |c| < 1");
  cmd_iso->add_option("--samples", samples);
  cmd_iso->add_option("--seed", seed);
  cmd_iso->add_option("--curvature-tol", curvature_tol);
  cmd_iso->add_option("--format", g.format, "json|csv");

  auto* cmd_forms = app.add_subcommand("forms", "distinguished 2- and 3-form checks");
  cmd_forms->add_option("--seed", seed);
  cmd_forms->add_option("--rank-tol", rank_tol);
  cmd_forms->add_flag("--no-frame-search", no_frame_search);

  auto* cmd_magic = app.add_subcommand("magic-square", "torsionless model dimension table");
  cmd_magic->add_option("--format", g.format, "json|table");

  // let --output/--threads appear after the subcommand as well
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  Eigen::setNbThreads(g.threads > 0 ? g.threads : hw);

  try {
    if (cmd_build->parsed()) {
      if (int rc = require_supported_dim(dim)) return rc;
      emit_json(g, upsilon_to_json(upsilon_from_cubic(dim)));
      return 0;
    }

    if (cmd_verify->parsed()) {
      if (int rc = require_supported_dim(dim)) return rc;
      IdentityReport rep = verify_identities(upsilon_from_cubic(dim));
      Json j = identity_report_to_json(rep);
      if (!with_timings) {
        for (auto& c : j["checks"]) c.erase("elapsed_ms");
      }
      emit_json(g, j);
      return rep.all_pass() ? 0 : 1;
    }

    if (cmd_stab->parsed()) {
      if (int rc = require_supported_dim(dim)) return rc;
      if (mode == "exact" && dim == 26 && profile != "slow") {
        std::cerr << "error: exact elimination at dim 26 needs --profile slow\n";
        return 2;
      }
      Mode m = mode == "exact" ? Mode::Exact : Mode::Float;
      Subspace h = stabilizer_sym3(upsilon_from_cubic(dim), m, rank_tol);
      Json j = subspace_to_json(h);
      j["bracket_closed"] = bracket_closure_check(h, dim, rank_tol);
      emit_json(g, j);
      return 0;
    }

    if (cmd_dec->parsed()) {
      if (int rc = require_supported_dim(dim)) return rc;
      ModuleKind mk;
      if (module == "vector") {
        mk = ModuleKind::Vector;
      } else if (module == "lambda3") {
        mk = ModuleKind::Lambda3;
      } else if (module == "conn") {
        mk = ModuleKind::Conn;
      } else {
        std::cerr << "error: --module must be vector|lambda3|conn\n";
        return 2;
      }
      Subspace h = stabilizer_sym3(upsilon_from_cubic(dim), Mode::Float, rank_tol);
      DecompositionReport rep = isotypic(h, mk, dim, cluster_tol, profile == "slow");
      if (g.format == "table") {
        emit(g, decomposition_to_table(rep));
      } else {
        Json j = decomposition_to_json(rep);
        if (with_commutants) {
          std::vector<int> cd = component_commutant_dims(h, mk, dim, cluster_tol, rank_tol);
          for (std::size_t i = 0; i < cd.size(); ++i) {
            j["components"][i]["commutant_dim"] = cd[i];
          }
        }
        emit_json(g, j);
      }
      return 0;
    }

    if (cmd_counts->parsed()) {
      if (int rc = require_supported_dim(dim)) return rc;
      ComponentCounts c = restricted_component_counts(dim, rank_tol);
      Json j = counts_to_json(dim, c);
      if (with_kernel) {
        if (dim == 26 && profile != "slow") {
          std::cerr << "error: defect kernel at dim 26 needs --profile slow\n";
          return 2;
        }
        j["defect_kernel_dim"] = nearly_integrable_kernel_dim(upsilon_from_cubic(dim), rank_tol);
      }
      emit_json(g, j);
      return 0;
    }

    if (cmd_split->parsed()) {
      if (int rc = require_supported_dim(dim)) return rc;
      Json input_json;
      if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        input_json = Json::parse(buf.str());
      } else {
        std::ifstream in(input);
        if (!in) {
          std::cerr << "error: cannot open " << input << "\n";
          return 2;
        }
        input_json = Json::parse(in);
      }
      ConnElement c = conn_from_json(input_json);
      if (c.n != dim) {
        std::cerr << "error: input dimension " << c.n << " does not match --dim " << dim << "\n";
        return 2;
      }
      SplitContext ctx(upsilon_from_cubic(dim), rank_tol);
      emit_json(g, split_to_json(split(c, ctx)));
      return 0;
    }

    if (cmd_iso->parsed()) {
      if (int rc = require_supported_dim(dim)) return rc;
      UpsilonFloat uf = UpsilonFloat::from(upsilon_from_cubic(dim));
      CurvatureReport rep = verify_isoparametric(uf, level, samples, curvature_tol, seed);
      if (g.format == "csv") {
        emit(g, curvature_to_csv(rep));
      } else {
        emit_json(g, curvature_to_json(rep));
      }
      return rep.pass ? 0 : 1;
    }

    if (cmd_forms->parsed()) {
      FormStabilizerReport fs = verify_form_stabilizers(rank_tol);
      TauSpanReport ts = verify_tau_span(rank_tol);
      V1LinkReport v1 = verify_v1_link(rank_tol, !no_frame_search, seed);
      Json j{{"stabilizers", form_stabilizers_to_json(fs)},
             {"tau_span", tau_span_to_json(ts)},
             {"v1_link", v1_link_to_json(v1)},
             {"catalog", catalog_to_json(build_catalog())}};
      emit_json(g, j);
      return fs.pass && ts.pass && v1.pass ? 0 : 1;
    }

    if (cmd_magic->parsed()) {
      auto table = model_table();
      if (g.format == "table") {
        emit(g, model_table_to_table(table));
      } else {
        emit_json(g, model_table_to_json(table));
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
