#include <doctest.h>

#include <cmath>
#include <numbers>

#include "emhd/errors.hpp"
#include "emhd/littlewood_paley.hpp"
#include "emhd/norms.hpp"
#include "emhd/operators.hpp"
#include "util.hpp"

using namespace emhd;
using testutil::cos_mode;
using testutil::max_diff;
using testutil::sample_scalar;

namespace {

constexpr double kPi = std::numbers::pi;

SpectralField vector_mode4(const Grid& g) { return cos_mode(g, 4, 3, 1); }

double l3_cos() { return std::cbrt(std::pow(2 * kPi, 2) * 8.0 / 3.0); }

// Scalar noise on every representable mode, then restricted to shell q.
SpectralField shell_noise(const Grid& g, int q, unsigned seed) {
  return lp::project_shell(testutil::random_field(g, 1, g.n() / 2, seed), q);
}

}  // namespace

TEST_CASE("symbol family") {
  CHECK(lp::chi(0.0) == 1.0);
  CHECK(lp::chi(0.75) == 1.0);
  CHECK(lp::chi(1.0) == 0.0);
  CHECK(lp::chi(0.875) == doctest::Approx(0.5));
  Grid g(64);
  const int qm = lp::q_max(g);
  CHECK(qm == int(std::ceil(std::log2(21.0))) + 1);
  double worst = 0;
  for_each_mode(g, [&](const Mode& m) {
    const double r = std::sqrt(m.k2());
    double s = 0;
    for (int q = -1; q <= qm; ++q) s += lp::shell_symbol(q, r);
    worst = std::max(worst, std::abs(s - 1.0));
    for (int q = 0; q <= qm; ++q) {
      if (r < 0.75 * lp::lambda(q) || r > 2 * lp::lambda(q)) {
        CHECK(lp::shell_symbol(q, r) == 0.0);
      }
    }
  });
  CHECK(worst <= 1e-12);
  CHECK_THROWS_AS(lp::shell_symbol(-2, 1.0), ParameterError);
}

TEST_CASE("project_shell and low_pass examples") {
  Grid g(32);
  const auto f = cos_mode(g, 4);
  CHECK(max_diff(lp::project_shell(f, 2), f) <= 1e-15);
  CHECK(lp::project_shell(f, 5).max_abs_coeff() == 0.0);
  CHECK(lp::project_shell(f, lp::q_max(g) + 1).max_abs_coeff() == 0.0);
  CHECK_THROWS_AS(lp::project_shell(f, -2), ParameterError);

  SpectralField c(g, 3);
  c.at(1, 0) = 2.0;
  CHECK(max_diff(lp::project_shell(c, -1), c) == 0.0);

  const auto r = testutil::random_field(g, 3, g.dealias_cutoff(), 4);
  CHECK(l2_norm(lp::low_pass(r, lp::q_max(g)) - r) <= 1e-12 * l2_norm(r));
  const auto twice = lp::low_pass(lp::low_pass(r, lp::q_max(g) + 2), lp::q_max(g) + 2);
  CHECK(l2_norm(twice - r) <= 1e-12 * l2_norm(r));
  CHECK(lp::low_pass(f, 0).max_abs_coeff() == 0.0);
  CHECK(lp::low_pass(SpectralField(g, 1), 3).max_abs_coeff() == 0.0);
}

TEST_CASE("decomposition properties") {
  Grid g(64);
  const auto f = testutil::random_field(g, 3, g.dealias_cutoff(), 8);
  const auto d = lp::decompose(f);
  SpectralField sum(g, 3);
  for (const auto& s : d.shells) sum += s;
  CHECK(l2_norm(sum - f) <= 1e-12 * l2_norm(f));

  for (int i = -1; i <= d.q_max(); ++i) {
    for (int j = i + 2; j <= d.q_max(); ++j) {
      CHECK(lp::project_shell(d.shell(j), i).max_abs_coeff() <= 1e-13 * f.max_abs_coeff());
    }
  }
}

TEST_CASE("besov_norm") {
  Grid g(32);
  const double inf = std::numeric_limits<double>::infinity();
  SUBCASE("single-shell vector field") {
    const double v = lp::besov_norm(vector_mode4(g), {1.0 / 3.0, 3.0, inf});
    CHECK(v == doctest::Approx(std::pow(2.0, 2.0 / 3.0) * l3_cos()).epsilon(1e-3));
    CHECK(v == doctest::Approx(7.496).epsilon(1e-3));
  }
  CHECK(lp::besov_norm(SpectralField(g, 3), {0.5, 3.0, 2.0}) == 0.0);
  SUBCASE("B^0_{2,2} is equivalent to L2") {
    for (unsigned seed = 1; seed <= 4; ++seed) {
      const auto f = testutil::random_field(g, 3, 8, seed);
      const double ratio = lp::besov_norm(f, {0.0, 2.0, 2.0}) / l2_norm(f);
      CHECK(ratio >= 1.0 / std::sqrt(3.0));
      CHECK(ratio <= std::sqrt(3.0));
    }
  }
  SUBCASE("dyadic modes obey the 2^(s j) law") {
    Grid g(64);
    for (int j = 1; j <= 4; ++j) {
      for (double s : {1.0 / 3.0, 0.5, 1.0}) {
        const double v = lp::besov_norm(cos_mode(g, 1 << j), {s, inf, inf});
        CHECK(std::abs(v - std::pow(2.0, s * j)) <= 1e-10 * std::pow(2.0, s * j));
      }
    }
  }
  SUBCASE("translation invariance") {
    const auto f = testutil::random_field(g, 3, 6, 2);
    auto shift = [&](double a1, double a2, double a3) {
      SpectralField out = f;
      for_each_mode(g, [&](const Mode& m) {
        const complex ph = std::polar(1.0, -(m.kx * a1 + m.ky * a2 + m.kz * a3));
        for (int c = 0; c < 3; ++c) out.at(c, m.index) *= ph;
      });
      return out;
    };
    const double h = g.spacing() / 2;  // oversampled quadrature grid
    for (double p : {2.0, 3.0, inf}) {
      const lp::BesovSpec spec{0.5, p, inf};
      const double base = lp::besov_norm(f, spec);
      CHECK(std::abs(lp::besov_norm(shift(3 * h, 5 * h, 11 * h), spec) - base) <= 1e-10 * base);
    }
    const lp::BesovSpec spec2{0.5, 2.0, inf};
    const double base2 = lp::besov_norm(f, spec2);
    CHECK(std::abs(lp::besov_norm(shift(0.123, 0.77, 2.5), spec2) - base2) <= 1e-10 * base2);
  }
}

TEST_CASE("besov_time_norm") {
  Grid g(16);
  const auto f0 = testutil::random_field(g, 3, 4, 3);
  const lp::BesovSpec spec{1.0 / 3.0, 3.0, std::numeric_limits<double>::infinity()};
  const double n0 = lp::besov_norm(f0, spec);

  std::vector<SpectralField> constant, decaying, zero;
  const int steps = 400;
  for (int i = 0; i <= steps; ++i) {
    const double t = double(i) / steps;
    SpectralField a = f0, b = std::exp(-t) * f0, z(g, 3);
    a.set_time(t);
    b.set_time(t);
    z.set_time(t);
    constant.push_back(a);
    decaying.push_back(b);
    zero.push_back(z);
  }
  CHECK(lp::besov_time_norm(constant, 3.0, spec) == doctest::Approx(n0).epsilon(1e-12));
  const double expected = n0 * std::sqrt((1 - std::exp(-2.0)) / 2);
  CHECK(lp::besov_time_norm(decaying, 2.0, spec) == doctest::Approx(expected).epsilon(1e-5));
  CHECK(lp::besov_time_norm(zero, 2.0, spec) == 0.0);
  CHECK(lp::besov_time_norm(decaying, std::numeric_limits<double>::infinity(), spec) ==
        doctest::Approx(n0).epsilon(1e-12));
  CHECK_THROWS_AS(lp::besov_time_norm(std::span(constant).first(1), 2.0, spec), ParameterError);
}

TEST_CASE("decompose_low_high") {
  Grid g(128);
  const auto s2 = shell_noise(g, 2, 1);
  const auto s6 = shell_noise(g, 6, 2);
  {
    const auto split = lp::decompose_low_high(s2, 4);
    CHECK(split.high.max_abs_coeff() <= 1e-15 * s2.max_abs_coeff());
    CHECK(split.high_norm <= 1e-12);
  }
  {
    const auto split = lp::decompose_low_high(s6, 2);
    CHECK(split.low.max_abs_coeff() == 0.0);
    CHECK(split.grad_low_inf == 0.0);
  }
  {
    const auto both = s2 + s6;
    const auto split = lp::decompose_low_high(both, 4);
    CHECK(max_diff(split.low, s2) <= 1e-12 * s2.max_abs_coeff());
    CHECK(max_diff(split.high, s6) <= 1e-12 * s6.max_abs_coeff());
    CHECK(max_diff(split.low + split.high, both) <= 1e-15 * both.max_abs_coeff());
    CHECK(split.high_norm == doctest::Approx(lp_norm(s6, 4.0)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(lp::decompose_low_high(s2, -2), ParameterError);
}

TEST_CASE("shell amplitudes") {
  Grid g(32);
  const auto a = lp::shell_amplitudes(vector_mode4(g));
  for (int q = -1; q <= lp::q_max(g); ++q) {
    if (q == 2) {
      CHECK(a.b_at(q) == doctest::Approx(std::cbrt(4.0) * l3_cos()).epsilon(1e-3));
      CHECK(a.b_at(q) == doctest::Approx(7.496).epsilon(1e-3));
    } else {
      CHECK(a.b_at(q) == 0.0);
    }
  }
  const auto z = lp::shell_amplitudes(SpectralField(g, 3));
  for (double v : z.b) CHECK(v == 0.0);
  for (double v : z.beta) CHECK(v == 0.0);

  const auto r = lp::shell_amplitudes(testutil::random_field(g, 3, 10, 6));
  for (int q = -1; q <= lp::q_max(g); ++q) {
    CHECK(r.b_at(q) >= 0.0);
    if (r.b_at(q) > 0) {
      CHECK(r.beta_at(q) / r.b_at(q) == doctest::Approx(std::cbrt(lp::lambda(q))).epsilon(1e-14));
    }
  }
}

TEST_CASE("kernel_convolve") {
  std::vector<double> amps(8, 0.0);
  amps[1] = 1.0;  // q = 0
  CHECK(lp::kernel_convolve(amps, lp::Kernel::K, 0) == doctest::Approx(1.0));
  CHECK(lp::kernel_convolve(amps, lp::Kernel::K, 1) == doctest::Approx(0.39685).epsilon(1e-5));
  CHECK(lp::kernel_convolve(amps, lp::Kernel::K, -1) == doctest::Approx(0.62996).epsilon(1e-5));
  CHECK(lp::kernel_value(lp::Kernel::kappa, 1) == doctest::Approx(std::pow(2.0, -2.0 / 3.0)));
  CHECK(lp::kernel_value(lp::Kernel::kappa, -1) == doctest::Approx(std::pow(2.0, -4.0 / 3.0)));

  std::vector<double> a{0.3, 1.2, 0.0, 2.5, 0.1, 0.7}, b{1.0, 0.0, 0.4, 0.2, 3.0, 0.0};
  for (auto kernel : {lp::Kernel::K, lp::Kernel::kappa}) {
    for (int Q = -1; Q <= 8; ++Q) {
      std::vector<double> lin(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) lin[i] = 2.0 * a[i] + 3.0 * b[i];
      CHECK(lp::kernel_convolve(lin, kernel, Q) ==
            doctest::Approx(2.0 * lp::kernel_convolve(a, kernel, Q) +
                            3.0 * lp::kernel_convolve(b, kernel, Q)));
      for (std::size_t i = 0; i < a.size(); ++i) {
        auto bumped = a;
        bumped[i] += 0.5;
        CHECK(lp::kernel_convolve(bumped, kernel, Q) >= lp::kernel_convolve(a, kernel, Q));
      }
    }
  }
  std::vector<double> bad{1.0, -0.1};
  CHECK_THROWS_AS(lp::kernel_convolve(bad, lp::Kernel::K, 0), ParameterError);
}

TEST_CASE("bernstein_margin") {
  Grid g(32);
  const auto f = cos_mode(g, 4);
  const double expected = 1.0 / (std::pow(4.0, 1.5) * std::sqrt(std::pow(2 * kPi, 3) / 2));
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(lp::bernstein_margin(f, 2, inf) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(lp::bernstein_margin(f, 2, inf) == doctest::Approx(0.01122).epsilon(1e-3));
  CHECK(lp::bernstein_margin(f, 3, 3) == 1.0);
  const auto s = shell_noise(g, 3, 12);
  CHECK(std::abs(lp::bernstein_margin(5.0 * s, 2, inf) - lp::bernstein_margin(s, 2, inf)) <=
        1e-13 * lp::bernstein_margin(s, 2, inf));
  CHECK_THROWS_AS(lp::bernstein_margin(cos_mode(g, 2) + cos_mode(g, 12), 2, inf),
                  PreconditionError);
  CHECK(lp::containing_shell(s) == 3);
}

TEST_CASE("besov tail decay") {
  Grid g(64);
  // Coefficients decaying like |k|^-4: the B^(1/3)_3 tail falls off quickly.
  auto f = testutil::random_field(g, 1, g.dealias_cutoff(), 9);
  f = apply_symbol(f, [](const Mode& m) { return 1.0 / std::pow(1.0 + m.k2(), 2.0); });
  CHECK(lp::besov_tail_decay(f, 1.0 / 3.0, 3.0) < -1.0);
}
