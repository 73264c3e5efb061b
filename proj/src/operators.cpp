#include "emhd/operators.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "emhd/errors.hpp"
#include "emhd/norms.hpp"

namespace emhd {
namespace {

constexpr complex I{0.0, 1.0};

void require_vector(const SpectralField& f, const char* op) {
  if (!f.is_vector()) throw ShapeError(std::string(op) + " needs a vector field");
}

void require_scalar(const SpectralField& f, const char* op) {
  if (f.is_vector()) throw ShapeError(std::string(op) + " needs a scalar field");
}

void require_same_grid(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid())) throw ShapeError("fields live on different grids");
}

// d/dx_dir of component c as a scalar field.
SpectralField partial(const SpectralField& f, int c, int dir) {
  SpectralField out(f.grid(), 1);
  auto src = f.component(c);
  auto dst = out.component(0);
  for_each_mode(f.grid(), [&](const Mode& m) {
    const int k = dir == 0 ? m.kx : dir == 1 ? m.ky : m.kz;
    dst[m.index] = I * double(k) * src[m.index];
  });
  return out;
}

SpectralField scalar_component(const SpectralField& f, int c) {
  SpectralField out(f.grid(), 1);
  auto src = f.component(c);
  std::copy(src.begin(), src.end(), out.component(0).begin());
  return out;
}

double relative(double residual, std::initializer_list<double> scales) {
  double s = 0.0;
  for (double v : scales) s = std::max(s, v);
  return s > 0.0 ? residual / s : residual;
}

}  // namespace

SpectralField apply_symbol(const SpectralField& f,
                           const std::function<double(const Mode&)>& symbol) {
  SpectralField out = f;
  for_each_mode(f.grid(), [&](const Mode& m) {
    const double s = symbol(m);
    for (int c = 0; c < f.ncomp(); ++c) out.at(c, m.index) *= s;
  });
  return out;
}

void dealias(SpectralField& f) {
  const Grid& g = f.grid();
  for_each_mode(g, [&](const Mode& m) {
    if (g.is_dealiased(m.kx, m.ky, m.kz)) return;
    for (int c = 0; c < f.ncomp(); ++c) f.at(c, m.index) = 0.0;
  });
}

SpectralField dealiased(SpectralField f) {
  dealias(f);
  return f;
}

SpectralField curl(const SpectralField& f) {
  require_vector(f, "curl");
  SpectralField out(f.grid(), 3);
  auto fx = f.component(0), fy = f.component(1), fz = f.component(2);
  auto ox = out.component(0), oy = out.component(1), oz = out.component(2);
  for_each_mode(f.grid(), [&](const Mode& m) {
    const std::size_t i = m.index;
    ox[i] = I * (double(m.ky) * fz[i] - double(m.kz) * fy[i]);
    oy[i] = I * (double(m.kz) * fx[i] - double(m.kx) * fz[i]);
    oz[i] = I * (double(m.kx) * fy[i] - double(m.ky) * fx[i]);
  });
  out.set_time(f.time());
  return out;
}

SpectralField divergence(const SpectralField& f) {
  require_vector(f, "divergence");
  SpectralField out(f.grid(), 1);
  auto d = out.component(0);
  for_each_mode(f.grid(), [&](const Mode& m) {
    d[m.index] = I * (double(m.kx) * f.at(0, m.index) + double(m.ky) * f.at(1, m.index) +
                      double(m.kz) * f.at(2, m.index));
  });
  return out;
}

SpectralField gradient(const SpectralField& scalar) {
  require_scalar(scalar, "gradient");
  SpectralField out(scalar.grid(), 3);
  auto s = scalar.component(0);
  for_each_mode(scalar.grid(), [&](const Mode& m) {
    out.at(0, m.index) = I * double(m.kx) * s[m.index];
    out.at(1, m.index) = I * double(m.ky) * s[m.index];
    out.at(2, m.index) = I * double(m.kz) * s[m.index];
  });
  return out;
}

SpectralField laplacian(const SpectralField& f) {
  auto out = apply_symbol(f, [](const Mode& m) { return -m.k2(); });
  out.set_time(f.time());
  return out;
}

std::vector<SpectralField> gradient_components(const SpectralField& f) {
  std::vector<SpectralField> out;
  out.reserve(3 * f.ncomp());
  for (int j = 0; j < f.ncomp(); ++j)
    for (int i = 0; i < 3; ++i) out.push_back(partial(f, j, i));
  return out;
}

SpectralField leray_project(const SpectralField& f) {
  require_vector(f, "leray_project");
  SpectralField out = f;
  for_each_mode(f.grid(), [&](const Mode& m) {
    const double k2 = m.k2();
    if (k2 == 0.0) return;
    const complex kdotf = double(m.kx) * f.at(0, m.index) +
                          double(m.ky) * f.at(1, m.index) +
                          double(m.kz) * f.at(2, m.index);
    out.at(0, m.index) -= double(m.kx) * kdotf / k2;
    out.at(1, m.index) -= double(m.ky) * kdotf / k2;
    out.at(2, m.index) -= double(m.kz) * kdotf / k2;
  });
  return out;
}

SpectralField biot_savart(const SpectralField& b) {
  require_vector(b, "biot_savart");
  const double scale = std::max(1.0, b.max_abs_coeff());
  for (int c = 0; c < 3; ++c) {
    if (std::abs(b.mean(c)) > 1e-14 * scale) {
      throw GaugeError("biot_savart: mean mode of B must vanish");
    }
  }
  SpectralField a = curl(b);
  for_each_mode(b.grid(), [&](const Mode& m) {
    const double k2 = m.k2();
    for (int c = 0; c < 3; ++c) {
      a.at(c, m.index) = k2 == 0.0 ? complex{} : a.at(c, m.index) / k2;
    }
  });
  a.set_time(b.time());
  return a;
}

SpectralField cross(const SpectralField& a, const SpectralField& b) {
  require_vector(a, "cross");
  require_vector(b, "cross");
  require_same_grid(a, b);
  const auto pa = a.to_physical();
  const auto pb = b.to_physical();
  const std::size_t np = a.grid().physical_size();
  std::vector<double> out(3 * np);
  for (std::size_t i = 0; i < np; ++i) {
    const double ax = pa[i], ay = pa[np + i], az = pa[2 * np + i];
    const double bx = pb[i], by = pb[np + i], bz = pb[2 * np + i];
    out[i] = ay * bz - az * by;
    out[np + i] = az * bx - ax * bz;
    out[2 * np + i] = ax * by - ay * bx;
  }
  auto f = SpectralField::from_physical(a.grid(), 3, out);
  dealias(f);
  return f;
}

SpectralField dot(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a, b);
  if (a.ncomp() != b.ncomp()) throw ShapeError("dot: component counts differ");
  const auto pa = a.to_physical();
  const auto pb = b.to_physical();
  const std::size_t np = a.grid().physical_size();
  std::vector<double> out(np, 0.0);
  for (int c = 0; c < a.ncomp(); ++c)
    for (std::size_t i = 0; i < np; ++i) out[i] += pa[c * np + i] * pb[c * np + i];
  auto f = SpectralField::from_physical(a.grid(), 1, out);
  dealias(f);
  return f;
}

SpectralField multiply(const SpectralField& scalar, const SpectralField& f) {
  require_scalar(scalar, "multiply");
  require_same_grid(scalar, f);
  const auto ps = scalar.to_physical();
  auto pf = f.to_physical();
  const std::size_t np = f.grid().physical_size();
  for (int c = 0; c < f.ncomp(); ++c)
    for (std::size_t i = 0; i < np; ++i) pf[c * np + i] *= ps[i];
  auto out = SpectralField::from_physical(f.grid(), f.ncomp(), pf);
  dealias(out);
  return out;
}

SpectralField advect(const SpectralField& a, const SpectralField& b) {
  require_vector(a, "advect");
  require_same_grid(a, b);
  const std::size_t np = a.grid().physical_size();
  const auto pa = a.to_physical();
  std::vector<double> out(b.ncomp() * np, 0.0);
  for (int c = 0; c < b.ncomp(); ++c) {
    for (int dir = 0; dir < 3; ++dir) {
      const auto d = partial(b, c, dir).component_physical(0);
      for (std::size_t i = 0; i < np; ++i) out[c * np + i] += pa[dir * np + i] * d[i];
    }
  }
  auto f = SpectralField::from_physical(a.grid(), b.ncomp(), out);
  dealias(f);
  return f;
}

SpectralField tensor_divergence(const SpectralField& a, const SpectralField& b) {
  require_vector(a, "tensor_divergence");
  require_vector(b, "tensor_divergence");
  require_same_grid(a, b);
  const std::size_t np = a.grid().physical_size();
  const auto pa = a.to_physical();
  const auto pb = b.to_physical();
  SpectralField out(a.grid(), 3);
  std::vector<double> prod(np);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (std::size_t x = 0; x < np; ++x) prod[x] = pa[i * np + x] * pb[j * np + x];
      auto p = SpectralField::from_physical(a.grid(), 1, prod);
      dealias(p);
      auto dp = partial(p, 0, j);
      auto src = dp.component(0);
      auto dst = out.component(i);
      for (std::size_t k = 0; k < src.size(); ++k) dst[k] += src[k];
    }
  }
  return out;
}

HallTerms hall_nonlinearity(const SpectralField& b) {
  require_vector(b, "hall_nonlinearity");
  auto lorentz = cross(curl(b), b);
  auto hall = curl(lorentz);
  return {std::move(lorentz), std::move(hall)};
}

double identity_residual(const SpectralField& b) {
  require_vector(b, "identity_residual");
  auto lhs = cross(curl(b), b);
  auto half_grad = gradient(dot(b, b));
  half_grad *= 0.5;
  auto rhs = tensor_divergence(b, b) - half_grad;
  return l2_norm(lhs - rhs);
}

double ProductRuleResiduals::max() const {
  return std::max({gradient_of_product, divergence_of_product, curl_of_product,
                   curl_of_cross, cross_with_curl});
}

ProductRuleResiduals product_rule_residuals(const SpectralField& phi,
                                            const SpectralField& a,
                                            const SpectralField& b) {
  require_scalar(phi, "product_rule_residuals");
  require_vector(a, "product_rule_residuals");
  require_vector(b, "product_rule_residuals");
  ProductRuleResiduals r;
  const auto gphi = gradient(phi);
  const auto phi_a = multiply(phi, a);

  {
    // grad(phi a) as the 9 scalar entries d_i (phi a_j).
    double res2 = 0.0, s1 = 0.0, s2 = 0.0;
    const auto lhs = gradient_components(phi_a);
    const auto grad_a = gradient_components(a);
    for (int j = 0; j < 3; ++j) {
      for (int i = 0; i < 3; ++i) {
        const auto t1 = multiply(scalar_component(gphi, i), scalar_component(a, j));
        const auto t2 = multiply(phi, grad_a[3 * j + i]);
        const double d = l2_norm(lhs[3 * j + i] - t1 - t2);
        res2 += d * d;
        s1 += std::pow(l2_norm(t1), 2);
        s2 += std::pow(l2_norm(t2), 2);
      }
    }
    double l = 0.0;
    for (const auto& f : lhs) l += std::pow(l2_norm(f), 2);
    r.gradient_of_product =
        relative(std::sqrt(res2), {std::sqrt(l), std::sqrt(s1), std::sqrt(s2)});
  }
  {
    const auto lhs = divergence(phi_a);
    const auto t1 = dot(gphi, a);
    const auto t2 = multiply(phi, divergence(a));
    r.divergence_of_product = relative(l2_norm(lhs - t1 - t2),
                                       {l2_norm(lhs), l2_norm(t1), l2_norm(t2)});
  }
  {
    const auto lhs = curl(phi_a);
    const auto t1 = multiply(phi, curl(a));
    const auto t2 = cross(gphi, a);
    r.curl_of_product = relative(l2_norm(lhs - t1 - t2),
                                 {l2_norm(lhs), l2_norm(t1), l2_norm(t2)});
  }
  {
    const auto lhs = curl(cross(a, b));
    const auto t1 = multiply(divergence(b), a);
    const auto t2 = multiply(divergence(a), b);
    const auto t3 = advect(b, a);
    const auto t4 = advect(a, b);
    r.curl_of_cross =
        relative(l2_norm(lhs - t1 + t2 - t3 + t4),
                 {l2_norm(lhs), l2_norm(t1), l2_norm(t2), l2_norm(t3), l2_norm(t4)});
  }
  {
    const auto lhs = cross(curl(a), b);
    const auto t1 = cross(a, curl(b));
    const auto t2 = advect(a, b);
    const auto t3 = advect(b, a);
    const auto t4 = gradient(dot(a, b));
    r.cross_with_curl =
        relative(l2_norm(lhs - t1 - t2 - t3 + t4),
                 {l2_norm(lhs), l2_norm(t1), l2_norm(t2), l2_norm(t3), l2_norm(t4)});
  }
  return r;
}

double max_divergence(const SpectralField& f) {
  require_vector(f, "max_divergence");
  double m = 0.0;
  for_each_mode(f.grid(), [&](const Mode& md) {
    const complex d = double(md.kx) * f.at(0, md.index) + double(md.ky) * f.at(1, md.index) +
                      double(md.kz) * f.at(2, md.index);
    m = std::max(m, std::abs(d));
  });
  return m;
}

SpectralField resample(const SpectralField& f, const Grid& target) {
  SpectralField out(target, f.ncomp());
  out.set_time(f.time());
  const Grid& src = f.grid();
  const int lim = std::min(src.n(), target.n()) / 2;
  for_each_mode(src, [&](const Mode& m) {
    if (std::abs(m.kx) >= lim || std::abs(m.ky) >= lim || m.kz >= lim) return;
    const std::size_t j =
        target.spectral_index(target.index_of(m.kx), target.index_of(m.ky), m.kz);
    for (int c = 0; c < f.ncomp(); ++c) out.at(c, j) = f.at(c, m.index);
  });
  return out;
}

}  // namespace emhd
