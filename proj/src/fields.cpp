#include "ig/fields.hpp"

#include <cmath>
#include <memory>
#include <vector>

namespace ig {

RadialProfile make_bump_profile(double radius, double amplitude) {
  if (!(radius > 0.0))
    throw std::invalid_argument("make_bump_profile: radius must be positive");
  if (!std::isfinite(amplitude))
    throw std::invalid_argument("make_bump_profile: amplitude must be finite");
  double r2 = radius * radius;
  double A = amplitude;
  RadialProfile p;
  p.s_max = r2;
  p.value = [r2, A](double s) {
    if (s >= r2) return 0.0;
    return A * std::exp(-1.0 / (r2 - s));
  };
  p.deriv = [r2, A](double s) {
    if (s >= r2) return 0.0;
    double d = r2 - s;
    return -A * std::exp(-1.0 / d) / (d * d);
  };
  p.second = [r2, A](double s) {
    if (s >= r2) return 0.0;
    double d = r2 - s;
    // psi'' = psi * (1 - 2d) / d^4
    return A * std::exp(-1.0 / d) * (1.0 - 2.0 * d) / (d * d * d * d);
  };
  return p;
}

RadialProfile make_poly_profile(double radius, double amplitude) {
  if (!(radius > 0.0))
    throw std::invalid_argument("make_poly_profile: radius must be positive");
  if (!std::isfinite(amplitude))
    throw std::invalid_argument("make_poly_profile: amplitude must be finite");
  double r2 = radius * radius;
  double A = amplitude;
  RadialProfile p;
  p.s_max = r2;
  p.value = [r2, A](double s) {
    if (s >= r2) return 0.0;
    double d = r2 - s;
    return A * d * d * d * d;
  };
  p.deriv = [r2, A](double s) {
    if (s >= r2) return 0.0;
    double d = r2 - s;
    return -4.0 * A * d * d * d;
  };
  p.second = [r2, A](double s) {
    if (s >= r2) return 0.0;
    double d = r2 - s;
    return 12.0 * A * d * d;
  };
  return p;
}

SmoothField::SmoothField(int rank, double support_radius, Evaluator eval,
                         DerivEvaluator deriv)
    : rank_(rank), support_(support_radius), eval_(std::move(eval)),
      deriv_(std::move(deriv)) {
  if (rank < 0 || rank > 2)
    throw std::invalid_argument("SmoothField: rank must be 0, 1, or 2");
  if (!(support_ > 0.0))
    throw std::invalid_argument("SmoothField: support radius must be positive");
}

void SmoothField::derivatives(const Vec3& x, double* out) const {
  if (deriv_) {
    deriv_(x, out);
    return;
  }
  // 4th-order central differences per axis.
  double h = fd_step();
  int n = ncomp();
  double fp1[kMaxComp], fm1[kMaxComp], fp2[kMaxComp], fm2[kMaxComp];
  for (int k = 0; k < 3; ++k) {
    Vec3 e{};
    e[k] = 1.0;
    eval_(x + h * e, fp1);
    eval_(x - h * e, fm1);
    eval_(x + 2.0 * h * e, fp2);
    eval_(x - 2.0 * h * e, fm2);
    for (int c = 0; c < n; ++c)
      out[c * 3 + k] = (-fp2[c] + 8.0 * fp1[c] - 8.0 * fm1[c] + fm2[c]) / (12.0 * h);
  }
}

double SmoothField::scalar(const Vec3& x) const {
  double v[kMaxComp];
  eval_(x, v);
  return v[0];
}

Vec3 SmoothField::vector(const Vec3& x) const {
  double v[kMaxComp];
  eval_(x, v);
  return {v[0], v[1], v[2]};
}

double SmoothField::component(const Vec3& x, int i, int j) const {
  double v[kMaxComp];
  eval_(x, v);
  return v[sym_index(i, j)];
}

double SmoothField::trace(const Vec3& x) const {
  double v[kMaxComp];
  eval_(x, v);
  return v[0] + v[1] + v[2];
}

double SmoothField::contract(const Vec3& x, const Vec3& a) const {
  double v[kMaxComp];
  eval_(x, v);
  switch (rank_) {
    case 0:
      return v[0];
    case 1:
      return v[0] * a.x + v[1] * a.y + v[2] * a.z;
    default:
      return v[0] * a.x * a.x + v[1] * a.y * a.y + v[2] * a.z * a.z +
             2.0 * (v[3] * a.x * a.y + v[4] * a.x * a.z + v[5] * a.y * a.z);
  }
}

SmoothField zero_field(int rank) {
  int n = SmoothField::ncomp(rank);
  return SmoothField(
      rank, 1.0,
      [n](const Vec3&, double* out) {
        for (int c = 0; c < n; ++c) out[c] = 0.0;
      },
      [n](const Vec3&, double* out) {
        for (int c = 0; c < 3 * n; ++c) out[c] = 0.0;
      });
}

SmoothField radial_scalar(const RadialProfile& psi) {
  double R = std::sqrt(psi.s_max);
  auto val = psi.value;
  auto der = psi.deriv;
  return SmoothField(
      0, R,
      [val](const Vec3& x, double* out) { out[0] = val(norm2(x)); },
      [val, der](const Vec3& x, double* out) {
        double dp = der(norm2(x));
        out[0] = 2.0 * dp * x.x;
        out[1] = 2.0 * dp * x.y;
        out[2] = 2.0 * dp * x.z;
      });
}

SmoothField radial_velocity(const RadialProfile& psi) {
  double R = std::sqrt(psi.s_max);
  auto val = psi.value;
  auto der = psi.deriv;
  return SmoothField(
      1, R,
      [val](const Vec3& x, double* out) {
        double p = val(norm2(x));
        out[0] = p * x.x;
        out[1] = p * x.y;
        out[2] = p * x.z;
      },
      [val, der](const Vec3& x, double* out) {
        double s = norm2(x);
        double p = val(s), dp = der(s);
        // d v_i / d x_k = psi delta_ik + 2 psi' x_i x_k
        for (int i = 0; i < 3; ++i)
          for (int k = 0; k < 3; ++k)
            out[i * 3 + k] = (i == k ? p : 0.0) + 2.0 * dp * x[i] * x[k];
      });
}

namespace {

// Chebyshev-Lobatto table with barycentric interpolation on [0, s_max].
class ChebTable {
public:
  ChebTable(const std::function<double(double)>& f, double s_max, int n)
      : s_max_(s_max), nodes_(n + 1), values_(n + 1), weights_(n + 1) {
    for (int j = 0; j <= n; ++j) {
      double xj = std::cos(M_PI * j / n);  // [-1,1]
      nodes_[j] = 0.5 * s_max * (1.0 - xj);
      values_[j] = f(nodes_[j]);
      weights_[j] = (j % 2 == 0 ? 1.0 : -1.0);
      if (j == 0 || j == n) weights_[j] *= 0.5;
    }
  }

  double operator()(double s) const {
    double num = 0.0, den = 0.0;
    for (size_t j = 0; j < nodes_.size(); ++j) {
      double d = s - nodes_[j];
      if (d == 0.0) return values_[j];
      double t = weights_[j] / d;
      num += t * values_[j];
      den += t;
    }
    return num / den;
  }

private:
  double s_max_;
  std::vector<double> nodes_, values_, weights_;
};

}  // namespace

SmoothField radial_pressure(const RadialProfile& psi, const QuadratureSpec& spec) {
  double s_max = psi.s_max;
  double R = std::sqrt(s_max);
  auto val = psi.value;
  auto der = psi.deriv;

  // G(s) = 2 int_s^{s_max} (psi psi' t + psi^2) dt = Phi(s) - s psi(s)^2
  // with Phi(s) = int_s^{s_max} psi^2 dt (integration by parts).
  QuadratureSpec table_spec{std::max(8, spec.points_per_unit), std::max(16, spec.order)};
  auto phi_direct = [&](double s) {
    return integrate_interval([&](double t) { double p = val(t); return p * p; },
                              s, s_max, table_spec);
  };
  auto table = std::make_shared<ChebTable>(phi_direct, s_max, 128);

  // Self check at off-node points against a doubled-order direct integral.
  QuadratureSpec check = table_spec.doubled();
  double worst = 0.0;
  for (double frac : {0.137, 0.411, 0.683, 0.929}) {
    double s = frac * s_max;
    double direct = integrate_interval(
        [&](double t) { double p = val(t); return p * p; }, s, s_max, check);
    worst = std::max(worst, std::abs((*table)(s) - direct));
  }
  double scale_ref = std::abs(phi_direct(0.0)) + 1e-300;
  if (worst > 1e-10 * scale_ref)
    throw NumericalError("radial_pressure: pressure table failed self check",
                         worst / scale_ref);

  auto G = [table, val, s_max](double s) {
    if (s >= s_max) return 0.0;
    double p = val(s);
    return (*table)(s) - s * p * p;
  };
  auto dG = [val, der, s_max](double s) {
    if (s >= s_max) return 0.0;
    double p = val(s);
    return -2.0 * (p * der(s) * s + p * p);
  };

  return SmoothField(
      0, R,
      [G](const Vec3& x, double* out) { out[0] = G(norm2(x)); },
      [dG](const Vec3& x, double* out) {
        double g = 2.0 * dG(norm2(x));
        out[0] = g * x.x;
        out[1] = g * x.y;
        out[2] = g * x.z;
      });
}

SmoothField q_zero(const SmoothField& v, const SmoothField& p) {
  if (v.rank() != 1 || p.rank() != 0)
    throw std::invalid_argument("q_zero: expects rank-1 v and rank-0 p");
  double R = std::max(v.support_radius(), p.support_radius());
  auto vv = std::make_shared<SmoothField>(v);
  auto pp = std::make_shared<SmoothField>(p);
  return SmoothField(
      2, R,
      [vv, pp](const Vec3& x, double* out) {
        Vec3 u = vv->vector(x);
        double common = pp->scalar(x) + norm2(u);
        out[0] = common - 2.0 * u.x * u.x;
        out[1] = common - 2.0 * u.y * u.y;
        out[2] = common - 2.0 * u.z * u.z;
        out[3] = -2.0 * u.x * u.y;
        out[4] = -2.0 * u.x * u.z;
        out[5] = -2.0 * u.y * u.z;
      },
      [vv, pp](const Vec3& x, double* out) {
        Vec3 u = vv->vector(x);
        double ju[9], gp[3];
        vv->derivatives(x, ju);
        pp->derivatives(x, gp);
        for (int k = 0; k < 3; ++k) {
          double dcommon = gp[k] + 2.0 * (u.x * ju[0 + k] + u.y * ju[3 + k] +
                                          u.z * ju[6 + k]);
          for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
              double d = (i == j) ? dcommon : 0.0;
              d -= 2.0 * (ju[i * 3 + k] * u[j] + u[i] * ju[j * 3 + k]);
              out[sym_index(i, j) * 3 + k] = d;
            }
        }
      });
}

SmoothField outer_square(const SmoothField& v) {
  if (v.rank() != 1)
    throw std::invalid_argument("outer_square: expects a rank-1 field");
  auto vv = std::make_shared<SmoothField>(v);
  SmoothField::DerivEvaluator deriv;
  if (v.has_analytic_derivatives()) {
    deriv = [vv](const Vec3& x, double* out) {
      Vec3 u = vv->vector(x);
      double j[9];
      vv->derivatives(x, j);
      for (int i = 0; i < 3; ++i)
        for (int l = i; l < 3; ++l)
          for (int k = 0; k < 3; ++k)
            out[sym_index(i, l) * 3 + k] = j[i * 3 + k] * u[l] + u[i] * j[l * 3 + k];
    };
  }
  return SmoothField(
      2, v.support_radius(),
      [vv](const Vec3& x, double* out) {
        Vec3 u = vv->vector(x);
        out[0] = u.x * u.x;
        out[1] = u.y * u.y;
        out[2] = u.z * u.z;
        out[3] = u.x * u.y;
        out[4] = u.x * u.z;
        out[5] = u.y * u.z;
      },
      deriv);
}

SmoothField symmetric_gradient(const SmoothField& u) {
  if (u.rank() > 1)
    throw std::invalid_argument("symmetric_gradient: input rank must be 0 or 1");
  auto uu = std::make_shared<SmoothField>(u);
  if (u.rank() == 0) {
    return SmoothField(1, u.support_radius(),
                       [uu](const Vec3& x, double* out) { uu->derivatives(x, out); });
  }
  return SmoothField(2, u.support_radius(), [uu](const Vec3& x, double* out) {
    double j[9];
    uu->derivatives(x, j);
    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b)
        out[sym_index(a, b)] = 0.5 * (j[a * 3 + b] + j[b * 3 + a]);
  });
}

SmoothField psi_tensor(const SmoothField& v) {
  if (v.rank() != 1)
    throw std::invalid_argument("psi_tensor: expects a rank-1 field");
  auto vv = std::make_shared<SmoothField>(v);
  return SmoothField(2, v.support_radius(), [vv](const Vec3& x, double* out) {
    Vec3 u = vv->vector(x);
    double j[9];
    vv->derivatives(x, j);
    // d_m (v^a v^l) = j[a*3+m] v^l + v^a j[l*3+m]
    auto dvv = [&](int a, int l, int m) {
      return j[a * 3 + m] * u[l] + u[a] * j[l * 3 + m];
    };
    // eps_ilm contracted over l, m
    auto curl_row = [&](int i, int a) {
      // eps_ilm d_m(v^a v^l)
      int l1 = (i + 1) % 3, l2 = (i + 2) % 3;
      return dvv(a, l1, l2) - dvv(a, l2, l1);
    };
    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b)
        out[sym_index(a, b)] = 0.5 * (curl_row(a, b) + curl_row(b, a));
  });
}

SmoothField translate(const SmoothField& f, const Vec3& c) {
  auto ff = std::make_shared<SmoothField>(f);
  double R = f.support_radius() + norm(c);
  SmoothField::DerivEvaluator deriv;
  if (f.has_analytic_derivatives())
    deriv = [ff, c](const Vec3& x, double* out) { ff->derivatives(x - c, out); };
  return SmoothField(f.rank(), R,
                     [ff, c](const Vec3& x, double* out) { ff->values(x - c, out); },
                     deriv);
}

SmoothField rotate(const SmoothField& f, const Mat3& rot) {
  auto ff = std::make_shared<SmoothField>(f);
  Mat3 rt = rot.transposed();
  int rank = f.rank();

  auto eval = [ff, rot, rt, rank](const Vec3& x, double* out) {
    Vec3 y = rt * x;
    double raw[SmoothField::kMaxComp];
    ff->values(y, raw);
    if (rank == 0) {
      out[0] = raw[0];
    } else if (rank == 1) {
      Vec3 u = rot * Vec3{raw[0], raw[1], raw[2]};
      out[0] = u.x;
      out[1] = u.y;
      out[2] = u.z;
    } else {
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
          double s = 0.0;
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
              s += rot(i, a) * rot(j, b) * raw[sym_index(a, b)];
          out[sym_index(i, j)] = s;
        }
    }
  };

  SmoothField::DerivEvaluator deriv;
  if (f.has_analytic_derivatives()) {
    deriv = [ff, rot, rt, rank](const Vec3& x, double* out) {
      Vec3 y = rt * x;
      double raw[SmoothField::kMaxComp * 3];
      ff->derivatives(y, raw);
      if (rank == 0) {
        for (int k = 0; k < 3; ++k) {
          double s = 0.0;
          for (int b = 0; b < 3; ++b) s += raw[b] * rot(k, b);
          out[k] = s;
        }
      } else if (rank == 1) {
        for (int i = 0; i < 3; ++i)
          for (int k = 0; k < 3; ++k) {
            double s = 0.0;
            for (int a = 0; a < 3; ++a)
              for (int b = 0; b < 3; ++b)
                s += rot(i, a) * raw[a * 3 + b] * rot(k, b);
            out[i * 3 + k] = s;
          }
      } else {
        for (int i = 0; i < 3; ++i)
          for (int j = i; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
              double s = 0.0;
              for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                  for (int c = 0; c < 3; ++c)
                    s += rot(i, a) * rot(j, b) * raw[sym_index(a, b) * 3 + c] *
                         rot(k, c);
              out[sym_index(i, j) * 3 + k] = s;
            }
      }
    };
  }
  return SmoothField(rank, f.support_radius(), eval, deriv);
}

SmoothField modulated_field(int rank, const RadialProfile& psi,
                            const std::vector<LinearCoeff>& coeffs) {
  int n = SmoothField::ncomp(rank);
  if ((int)coeffs.size() != n)
    throw std::invalid_argument("modulated_field: coefficient count mismatch");
  double R = std::sqrt(psi.s_max);
  auto val = psi.value;
  auto der = psi.deriv;
  auto cs = coeffs;
  return SmoothField(
      rank, R,
      [val, cs, n](const Vec3& x, double* out) {
        double p = val(norm2(x));
        for (int c = 0; c < n; ++c) out[c] = p * (cs[c].b + dot(cs[c].g, x));
      },
      [val, der, cs, n](const Vec3& x, double* out) {
        double s = norm2(x);
        double p = val(s), dp = der(s);
        for (int c = 0; c < n; ++c) {
          double lin = cs[c].b + dot(cs[c].g, x);
          for (int k = 0; k < 3; ++k)
            out[c * 3 + k] = 2.0 * dp * x[k] * lin + p * cs[c].g[k];
        }
      });
}

SmoothField modulated_laplacian(int rank, const RadialProfile& psi,
                                const std::vector<LinearCoeff>& coeffs) {
  int n = SmoothField::ncomp(rank);
  if ((int)coeffs.size() != n)
    throw std::invalid_argument("modulated_laplacian: coefficient count mismatch");
  if (!psi.second)
    throw std::invalid_argument("modulated_laplacian: profile needs psi''");
  double R = std::sqrt(psi.s_max);
  auto val = psi.value;
  auto der = psi.deriv;
  auto sec = psi.second;
  auto cs = coeffs;
  // Lap(psi * g) = (6 psi' + 4 s psi'') g + 4 psi' <grad g, x> for linear g.
  return SmoothField(rank, R, [val, der, sec, cs, n](const Vec3& x, double* out) {
    double s = norm2(x);
    double dp = der(s), d2p = sec(s);
    double lap_psi = 6.0 * dp + 4.0 * s * d2p;
    for (int c = 0; c < n; ++c)
      out[c] = lap_psi * (cs[c].b + dot(cs[c].g, x)) + 4.0 * dp * dot(cs[c].g, x);
  });
}

}  // namespace ig
