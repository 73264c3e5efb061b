#include "emhd/helicity_identity.hpp"

#include <cmath>

#include "emhd/errors.hpp"
#include "emhd/norms.hpp"
#include "emhd/operators.hpp"

namespace emhd::diag {
namespace {

// Per-snapshot spatial integrals.
struct Moments {
  double ab_psi = 0;        // int A.B psi
  double ab_lap_psi = 0;    // int A.B Lap psi
  double grad_ab_psi = 0;   // int grad A : grad B psi
  double flux = 0;          // int (J x B) . (grad psi x A)
  double gauge = 0;         // int p B . grad psi
};

struct Samples {
  Grid fine;
  std::vector<double> values;
  std::size_t np() const { return fine.physical_size(); }
  const double* comp(int c) const { return values.data() + c * np(); }
};

Samples sample(const SpectralField& f, const Grid& fine) {
  return {fine, resample(f, fine).to_physical()};
}

Moments moments(const SpectralField& a, const SpectralField& b, bool coulomb,
                const Samples& psi, const Samples& lap_psi, const Samples& grad_psi) {
  const Grid& fine = psi.fine;
  const std::size_t np = fine.physical_size();
  const auto j = curl(b);
  const auto as = sample(a, fine);
  const auto bs = sample(b, fine);
  const auto js = sample(j, fine);
  // int psi grad A : grad B = (int A.B Lap psi - int psi (Lap A . B + A . Lap B)) / 2
  const auto la = sample(laplacian(a), fine);
  const auto lb = sample(laplacian(b), fine);
  Samples ps{fine, {}};
  if (coulomb) {
    const auto lorentz = cross(j, b);
    ps = sample(apply_symbol(divergence(lorentz),
                             [](const Mode& m) { return m.k2() > 0 ? -1.0 / m.k2() : 0.0; }),
                fine);
  }

  std::vector<double> w0(np), w1(np), w2(np), w3(np), w4(np);
  for (std::size_t k = 0; k < np; ++k) {
    const double A[3] = {as.comp(0)[k], as.comp(1)[k], as.comp(2)[k]};
    const double B[3] = {bs.comp(0)[k], bs.comp(1)[k], bs.comp(2)[k]};
    const double J[3] = {js.comp(0)[k], js.comp(1)[k], js.comp(2)[k]};
    const double G[3] = {grad_psi.comp(0)[k], grad_psi.comp(1)[k], grad_psi.comp(2)[k]};
    const double ps_k = psi.comp(0)[k];
    const double ab = A[0] * B[0] + A[1] * B[1] + A[2] * B[2];
    double lap_ab = 0.0;
    for (int c = 0; c < 3; ++c) lap_ab += la.comp(c)[k] * B[c] + A[c] * lb.comp(c)[k];
    const double gxa[3] = {G[1] * A[2] - G[2] * A[1], G[2] * A[0] - G[0] * A[2],
                           G[0] * A[1] - G[1] * A[0]};
    w0[k] = ab * ps_k;
    w1[k] = ab * lap_psi.comp(0)[k];
    w2[k] = lap_ab * ps_k;
    const double jxb[3] = {J[1] * B[2] - J[2] * B[1], J[2] * B[0] - J[0] * B[2],
                           J[0] * B[1] - J[1] * B[0]};
    w3[k] = jxb[0] * gxa[0] + jxb[1] * gxa[1] + jxb[2] * gxa[2];
    w4[k] = coulomb ? ps.comp(0)[k] * (B[0] * G[0] + B[1] * G[1] + B[2] * G[2]) : 0.0;
  }
  const int m = fine.n();
  const double ab_lap_psi = integrate_samples(w1, m);
  return {integrate_samples(w0, m), ab_lap_psi, 0.5 * (ab_lap_psi - integrate_samples(w2, m)),
          integrate_samples(w3, m), integrate_samples(w4, m)};
}

}  // namespace

double TestFunction::g(double t) const {
  double v = 0.0;
  for (std::size_t k = temporal.size(); k-- > 0;) v = v * t + temporal[k];
  return v;
}

double TestFunction::g_dot(double t) const {
  double v = 0.0;
  for (std::size_t k = temporal.size(); k-- > 1;) v = v * t + double(k) * temporal[k];
  return v;
}

TestFunction constant_test_function(const Grid& grid) {
  SpectralField psi(grid, 1);
  psi.at(0, 0) = 1.0;
  return {psi, {1.0}};
}

TestFunction envelope_test_function(const Grid& grid, double T) {
  if (!(T > 0.0)) throw ParameterError("test function horizon must be > 0");
  SpectralField psi(grid, 1);
  psi.at(0, 0) = 1.0;
  // cos x1 cos x2 = (cos(x1 + x2) + cos(x1 - x2)) / 2, four +-k modes of 1/4.
  for (int sx : {1, -1}) {
    for (int sy : {1, -1}) {
      psi.at(0, grid.spectral_index(grid.index_of(sx), grid.index_of(sy), 0)) = 0.25;
    }
  }
  return {psi, {1.0, -2.0 / T, 1.0 / (T * T)}};
}

HelicityIdentityReport generalized_helicity_report(const Trajectory& traj,
                                                   const TestFunction& phi) {
  HelicityIdentityReport rep;
  const auto& bs = traj.snapshots;
  if (bs.empty()) return rep;
  if (phi.spatial.ncomp() != 1 || phi.spatial.grid() != bs.front().grid()) {
    throw ShapeError("test function must be a scalar field on the trajectory grid");
  }
  const bool have_a = !traj.potentials.empty();
  if (have_a && traj.potentials.size() != bs.size()) {
    throw ShapeError("potential and field snapshot counts differ");
  }
  const bool coulomb = !have_a || traj.gauge == Gauge::coulomb;
  const double mu = traj.config.mu, d_i = traj.config.d_i;

  const Grid fine(2 * bs.front().grid().n());
  const auto psi = sample(phi.spatial, fine);
  const auto lap_psi = sample(laplacian(phi.spatial), fine);
  const auto grad_psi = sample(gradient(phi.spatial), fine);

  std::vector<Moments> mom;
  mom.reserve(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const auto a = have_a ? traj.potentials[i] : biot_savart(bs[i]);
    mom.push_back(moments(a, bs[i], coulomb, psi, lap_psi, grad_psi));
  }

  // Time integrands of the individual terms.
  auto diss = [&](std::size_t i) { return 2.0 * mu * phi.g(bs[i].time()) * mom[i].grad_ab_psi; };
  auto source = [&](std::size_t i) {
    const double t = bs[i].time();
    return phi.g_dot(t) * mom[i].ab_psi + mu * phi.g(t) * mom[i].ab_lap_psi;
  };
  auto flux = [&](std::size_t i) { return -d_i * phi.g(bs[i].time()) * mom[i].flux; };
  auto gauge = [&](std::size_t i) { return -d_i * phi.g(bs[i].time()) * mom[i].gauge; };

  const double h0 = phi.g(bs.front().time()) * mom.front().ab_psi;
  double i_diss = 0, i_src = 0, i_flux = 0, i_gauge = 0;
  rep.scale = std::abs(h0);
  std::vector<double> raw(bs.size());
  rep.points.resize(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (i > 0) {
      const double h = 0.5 * (bs[i].time() - bs[i - 1].time());
      i_diss += h * (diss(i) + diss(i - 1));
      i_src += h * (source(i) + source(i - 1));
      i_flux += h * (flux(i) + flux(i - 1));
      i_gauge += h * (gauge(i) + gauge(i - 1));
    }
    const double ht = phi.g(bs[i].time()) * mom[i].ab_psi;
    auto& pt = rep.points[i];
    pt.t = bs[i].time();
    pt.lhs = ht + i_diss;
    pt.rhs = h0 + i_src + i_flux + i_gauge;
    raw[i] = pt.lhs - pt.rhs;
    for (double v : {ht, i_diss, i_src, i_flux, i_gauge}) rep.scale = std::max(rep.scale, std::abs(v));
  }
  for (std::size_t i = 0; i < bs.size(); ++i) {
    rep.points[i].residual = rep.scale > 0.0 ? raw[i] / rep.scale : 0.0;
    rep.max_residual = std::max(rep.max_residual, std::abs(rep.points[i].residual));
  }
  return rep;
}

double generalized_helicity_residual(const Trajectory& traj, const TestFunction& phi) {
  return generalized_helicity_report(traj, phi).max_residual;
}

}  // namespace emhd::diag
