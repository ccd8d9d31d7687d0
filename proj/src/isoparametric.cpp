#include "isocubic/isoparametric.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace isocubic {

namespace {

constexpr double kNewtonTol = 1e-12;
constexpr int kNewtonMaxIter = 100;

Eigen::VectorXd spherical_gradient(const UpsilonFloat& u, const Eigen::VectorXd& a,
                                   double f) {
  Eigen::VectorXd g = u.gradient(a);
  // grad . a = 3F by homogeneity
  return g - (3.0 * f) * a;
}

}  // namespace

std::vector<Eigen::VectorXd> sample_level_set(const UpsilonFloat& u, double c, int count,
                                              std::uint64_t seed) {
  if (std::abs(c) >= 1.0) {
    throw std::invalid_argument("invalid level: regular levels require |c| < 1");
  }
  if (count < 1) throw std::invalid_argument("sample count must be positive");
  const int n = u.n;
  std::vector<Eigen::VectorXd> points;
  points.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) {
    // split the RNG per sample index for determinism under any scheduling
    std::seed_seq seq{seed, static_cast<std::uint64_t>(s)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd a(n);
    for (int i = 0; i < n; ++i) a[i] = gauss(rng);
    a.normalize();

    bool converged = false;
    for (int it = 0; it < kNewtonMaxIter; ++it) {
      const double f = u.evaluate(a);
      if (std::abs(f - c) < kNewtonTol) {
        converged = true;
        break;
      }
      Eigen::VectorXd gs = spherical_gradient(u, a, f);
      const double g2 = gs.squaredNorm();
      if (g2 < 1e-20) break;  // hit a critical point, cannot correct
      a -= ((f - c) / g2) * gs;
      a.normalize();
    }
    if (!converged) {
      throw std::runtime_error("level-set sampling failed to converge for sample " +
                               std::to_string(s));
    }
    points.push_back(std::move(a));
  }
  return points;
}

Eigen::MatrixXd shape_operator(const UpsilonFloat& u, const Eigen::VectorXd& a) {
  const int n = u.n;
  const double f = u.evaluate(a);
  Eigen::VectorXd gs = spherical_gradient(u, a, f);
  const double gn = gs.norm();
  if (gn < 1e-12) {
    throw std::domain_error("singular point: spherical gradient vanishes (critical level)");
  }
  Eigen::VectorXd nu = gs / gn;

  // orthonormal tangent basis of {a, nu}^perp via projected QR
  Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n, n) - a * a.transpose() -
                         nu * nu.transpose();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(proj, Eigen::ComputeThinU);
  Eigen::MatrixXd tangent = svd.matrixU().leftCols(n - 2);

  // A = -(P Hess P - 3F I) / |grad_S F| on the tangent space
  Eigen::MatrixXd hess = u.hessian(a);
  Eigen::MatrixXd ah = tangent.transpose() * hess * tangent;
  Eigen::MatrixXd shape =
      -(ah - 3.0 * f * Eigen::MatrixXd::Identity(n - 2, n - 2)) / gn;
  // symmetrize round-off
  return 0.5 * (shape + shape.transpose());
}

CurvatureReport verify_isoparametric(const UpsilonFloat& u, double c, int samples,
                                     double tol, std::uint64_t seed) {
  CurvatureReport report;
  report.n = u.n;
  report.level = c;
  report.sample_count = samples;
  const int n = u.n;
  const int hyp_dim = n - 2;
  if (hyp_dim % 3 != 0) {
    report.failure = "hypersurface dimension is not divisible by 3";
    return report;
  }
  const int mult = hyp_dim / 3;

  std::vector<Eigen::VectorXd> points = sample_level_set(u, c, samples, seed);
  std::vector<std::vector<double>> spectra;
  for (const auto& a : points) {
    Eigen::MatrixXd shape = shape_operator(u, a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(shape, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + hyp_dim);
    spectra.push_back(std::move(ev));
    report.sample_points.push_back(a);
  }
  report.sample_eigenvalues = spectra;

  // cluster each sorted spectrum into 3 equal blocks, then compare across points
  std::array<std::vector<double>, 3> cluster_values;
  std::array<double, 3> within{0.0, 0.0, 0.0};
  for (const auto& ev : spectra) {
    for (int g = 0; g < 3; ++g) {
      const double lo = ev[g * mult];
      const double hi = ev[g * mult + mult - 1];
      within[g] = std::max(within[g], hi - lo);
      double mean = 0.0;
      for (int i = 0; i < mult; ++i) mean += ev[g * mult + i];
      cluster_values[g].push_back(mean / mult);
    }
  }

  bool ok = true;
  for (int g = 0; g < 3; ++g) {
    CurvatureCluster cl;
    auto [mn, mx] = std::minmax_element(cluster_values[g].begin(), cluster_values[g].end());
    cl.across_point_spread = *mx - *mn;
    cl.within_point_spread = within[g];
    cl.multiplicity = mult;
    double mean = 0.0;
    for (double v : cluster_values[g]) mean += v;
    cl.value = mean / static_cast<double>(cluster_values[g].size());
    report.clusters.push_back(cl);
    if (cl.within_point_spread >= tol || cl.across_point_spread >= tol) {
      ok = false;
      report.failure = "curvature spread exceeds tolerance";
    }
  }
  // the three values must be distinct with gaps above 10*tol
  for (int g = 0; g + 1 < 3; ++g) {
    const double gap = report.clusters[g + 1].value - report.clusters[g].value;
    if (gap <= 10.0 * tol) {
      ok = false;
      report.failure = "cluster gap too small";
      report.max_pairwise_gap_violation =
          std::max(report.max_pairwise_gap_violation, 10.0 * tol - gap);
    }
  }
  report.pass = ok;
  return report;
}

}  // namespace isocubic
