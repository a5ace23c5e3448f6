#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "holobound/domains.hpp"
#include "holobound/geometry.hpp"
#include "holobound/measures.hpp"
#include "oracles.hpp"

namespace gen {

using holobound::Complex;
using holobound::CPoint;

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng); }
  Complex complex_normal() { return {normal(), normal()}; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<int>(v.size()) - 1))];
  }

  // Point with |z| <= r, uniform in the ball of radius r.
  CPoint in_ball(std::size_t n, double r) {
    std::vector<Complex> c(n);
    double s = 0.0;
    for (auto& x : c) {
      x = complex_normal();
      s += std::norm(x);
    }
    const double scale = r * std::pow(uniform(0.0, 1.0), 1.0 / (2.0 * n)) / std::sqrt(s);
    for (auto& x : c) x *= scale;
    return CPoint(std::move(c));
  }

  // Point with |z_j| <= frac * r_j on finite factors and |z_j| <= cap on C factors.
  CPoint in_polydisc(const std::vector<double>& radii, double frac, double cap) {
    std::vector<Complex> c(radii.size());
    for (std::size_t j = 0; j < radii.size(); ++j) {
      const double r = std::isfinite(radii[j]) ? frac * radii[j] : cap;
      c[j] = std::polar(r * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * oracle::pi));
    }
    return CPoint(std::move(c));
  }

  CPoint in_domain(const holobound::DomainSpec& d, double frac, double cap) {
    switch (d.kind()) {
      case holobound::DomainKind::FullSpace: return in_ball(d.dim(), cap);
      case holobound::DomainKind::UnitBall: return in_ball(d.dim(), frac);
      case holobound::DomainKind::Polydisc: return in_polydisc(d.radii(), frac, cap);
    }
    return CPoint::zero(d.dim());
  }

  // Poly-exp sum with 1..max_terms terms, small exponents and moderate exponentials.
  std::vector<oracle::Term> terms(std::size_t n, int max_terms = 3, int max_power = 2, double exp_scale = 0.3) {
    std::vector<oracle::Term> out(static_cast<std::size_t>(integer(1, max_terms)));
    for (auto& t : out) {
      t.coeff = complex_normal();
      t.powers.resize(n);
      t.expvec.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        t.powers[j] = integer(0, max_power);
        t.expvec[j] = exp_scale * complex_normal();
      }
    }
    return out;
  }
};

inline holobound::HoloFunction to_function(std::size_t n, const std::vector<oracle::Term>& terms) {
  std::vector<holobound::PolyExpTerm> out;
  for (const auto& t : terms) out.push_back({t.coeff, t.powers, t.expvec});
  return holobound::HoloFunction::poly_exp(n, std::move(out), "gen");
}

}  // namespace gen
