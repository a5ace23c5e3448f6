#pragma once

// Closed forms and a plain 1-D Simpson integrator, kept apart from the
// library so that engine results are compared against independent numbers.

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "holobound/geometry.hpp"

namespace oracle {

inline constexpr double pi = std::numbers::pi;

// int_C |z|^{2k} e^{-rate |z|^2} dlambda
inline double gaussian_moment(int k, double rate) { return pi * std::tgamma(k + 1.0) / std::pow(rate, k + 1.0); }

inline double beta_fn(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

// int_D |z|^{2k} (1 - |z|^2)^beta dlambda
inline double disc_moment(int k, double beta) { return pi * beta_fn(k + 1.0, beta + 1.0); }

// int_{B_n} (1 - |z|^2)^beta dlambda = pi^n Gamma(beta+1) / Gamma(beta+n+1)
inline double ball_mass(int n, double beta) {
  return std::pow(pi, n) * std::exp(std::lgamma(beta + 1.0) - std::lgamma(beta + n + 1.0));
}

// Composite Simpson on [a, b] with an even number of panels, long double sums.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels = 20000) {
  if (panels % 2) ++panels;
  const long double h = (static_cast<long double>(b) - a) / panels;
  long double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0L : 2.0L) * f(static_cast<double>(a + i * h));
  return static_cast<double>(s * h / 3.0L);
}

// 2 pi int_0^R g(r) r dr for a radial integrand on C.
inline double radial(const std::function<double(double)>& g, double R, int panels = 20000) {
  return 2.0 * pi * simpson([&](double r) { return g(r) * r; }, 0.0, R, panels);
}

// Same integral when g has a power singularity at r = R: r = R (1 - v^m) grades the nodes
// toward the edge, where the integrand becomes ~ v^{m - 1 + m beta} and Simpson is accurate again.
inline double radial_to_edge(const std::function<double(double)>& g, double R, int m = 8, int panels = 20000) {
  return 2.0 * pi * simpson(
                        [&](double v) {
                          const double r = R * (1.0 - std::pow(v, m));
                          return g(r) * r * R * m * std::pow(v, m - 1);
                        },
                        0.0, 1.0, panels);
}

// int_0^{2 pi} h(theta) dtheta, for the angular part of 1-D polar integrals.
inline double angular(const std::function<double(double)>& h, int panels = 4000) {
  return simpson(h, 0.0, 2.0 * pi, panels);
}

// 2-D polar integral over the disc of radius R: int_0^R int_0^{2pi} g(r e^{it}) r dt dr.
inline double polar2d(const std::function<double(holobound::Complex)>& g, double R, int nr = 2000, int nt = 400) {
  return simpson(
      [&](double r) {
        return r * simpson([&](double t) { return g(std::polar(r, t)); }, 0.0, 2.0 * pi, nt);
      },
      0.0, R, nr);
}

// Naive poly-exp evaluation, term by term.
struct Term {
  holobound::Complex coeff;
  std::vector<int> powers;
  std::vector<holobound::Complex> expvec;
};

inline holobound::Complex eval_terms(const std::vector<Term>& terms, const std::vector<holobound::Complex>& z) {
  holobound::Complex s = 0.0;
  for (const auto& t : terms) {
    holobound::Complex v = t.coeff;
    holobound::Complex e = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      for (int k = 0; k < t.powers[j]; ++k) v *= z[j];
      e += t.expvec[j] * z[j];
    }
    s += v * std::exp(e);
  }
  return s;
}

}  // namespace oracle
