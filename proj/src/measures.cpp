#include "holobound/measures.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace holobound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> unit_radii_if_empty(std::vector<double> radii, std::size_t n) {
  if (radii.empty()) radii.assign(n, 1.0);
  if (radii.size() != n) throw DimensionError("radii length must equal the dimension");
  return radii;
}

void require_inside(const DomainSpec& d, const CPoint& z, const char* what) {
  if (!contains(d, z, 0.0)) throw DomainError(std::string(what) + ": point outside the open domain");
}

std::string fmt_num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

MeasureSpec MeasureSpec::lebesgue(DomainSpec domain) {
  return MeasureSpec(std::move(domain), DensityKind::Lebesgue);
}

MeasureSpec MeasureSpec::ball_invariant(std::size_t n) {
  return MeasureSpec(DomainSpec::unit_ball(n), DensityKind::BallInvariant);
}

MeasureSpec MeasureSpec::polydisc_invariant(std::vector<double> radii) {
  auto d = DomainSpec::polydisc(std::move(radii));
  if (d.kind() != DomainKind::Polydisc)
    throw std::invalid_argument("polydisc-invariant measure needs at least one finite radius");
  return MeasureSpec(std::move(d), DensityKind::PolydiscInvariant);
}

std::string MeasureSpec::name() const {
  switch (kind_) {
    case DensityKind::Lebesgue: return "lebesgue";
    case DensityKind::BallInvariant: return "ball-invariant";
    case DensityKind::PolydiscInvariant: return "polydisc-invariant";
  }
  return "?";
}

double log_density(const MeasureSpec& m, const CPoint& z) {
  require_inside(m.domain(), z, "density");
  switch (m.kind()) {
    case DensityKind::Lebesgue: return 0.0;
    case DensityKind::BallInvariant:
      return -static_cast<double>(z.dim() + 1) * std::log1p(-norm2(z));
    case DensityKind::PolydiscInvariant: {
      double s = 0.0;
      const auto& r = m.domain().radii();
      for (std::size_t j = 0; j < z.dim(); ++j)
        if (std::isfinite(r[j])) s -= 2.0 * std::log1p(-std::norm(z[j]) / (r[j] * r[j]));
      return s;
    }
  }
  return 0.0;
}

double density(const MeasureSpec& m, const CPoint& z) { return std::exp(log_density(m, z)); }

// ---------------------------------------------------------------------------

WeightSpec::WeightSpec(WeightKind kind, std::size_t n, DomainSpec domain)
    : kind_(kind), n_(n), domain_(std::move(domain)) {}

WeightSpec WeightSpec::fock(std::size_t n, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("Fock weight: alpha must be in (0, inf)");
  WeightSpec w(WeightKind::Fock, n, DomainSpec::full_space(n));
  w.alphas_ = {alpha};
  return w;
}

WeightSpec WeightSpec::fock_aniso(std::vector<double> alphas) {
  for (double a : alphas)
    if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("Fock weight: alphas must be in (0, inf)");
  const std::size_t n = alphas.size();
  WeightSpec w(WeightKind::FockAniso, n, DomainSpec::full_space(n));
  w.alphas_ = std::move(alphas);
  w.blocks_.assign(n, 1);
  return w;
}

WeightSpec WeightSpec::fock_blocks(std::vector<std::size_t> block_sizes, std::vector<double> block_alphas) {
  if (block_sizes.size() != block_alphas.size() || block_sizes.empty())
    throw std::invalid_argument("Fock block weight: one alpha per block required");
  std::vector<double> alphas;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    if (block_sizes[b] == 0) throw std::invalid_argument("Fock block weight: empty block");
    alphas.insert(alphas.end(), block_sizes[b], block_alphas[b]);
  }
  auto w = fock_aniso(std::move(alphas));
  w.blocks_ = std::move(block_sizes);
  return w;
}

WeightSpec WeightSpec::ball_bergman(std::size_t n, double alpha, double p) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) throw std::invalid_argument("ball weight: alpha must be in (-1, inf)");
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("ball weight: p must be in (0, inf)");
  WeightSpec w(WeightKind::BallBergman, n, DomainSpec::unit_ball(n));
  w.alphas_ = {alpha};
  w.p_ = p;
  return w;
}

WeightSpec WeightSpec::polydisc_bergman(std::vector<double> alphas, double p, std::vector<double> radii) {
  const std::size_t n = alphas.size();
  radii = unit_radii_if_empty(std::move(radii), n);
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("polydisc weight: p must be in (0, inf)");
  for (std::size_t j = 0; j < n; ++j) {
    const bool finite = std::isfinite(radii[j]);
    if (finite && !(alphas[j] > -1.0))
      throw std::invalid_argument("polydisc weight: alpha_j must be in (-1, inf) on disc factors");
    if (!finite && !(alphas[j] > 0.0))
      throw std::invalid_argument("polydisc weight: alpha_j must be in (0, inf) on C factors");
    if (!std::isfinite(alphas[j])) throw std::invalid_argument("polydisc weight: alpha_j must be finite");
  }
  WeightSpec w(WeightKind::PolydiscBergman, n, DomainSpec::polydisc(radii));
  w.alphas_ = std::move(alphas);
  w.p_ = p;
  w.radii_ = std::move(radii);
  return w;
}

double WeightSpec::alpha(std::size_t j) const {
  if (kind_ == WeightKind::Fock || kind_ == WeightKind::BallBergman) return alphas_.front();
  return alphas_.at(j);
}

MeasureSpec WeightSpec::natural_measure() const {
  switch (kind_) {
    case WeightKind::Fock:
    case WeightKind::FockAniso: return MeasureSpec::lebesgue(domain_);
    case WeightKind::BallBergman: return MeasureSpec::ball_invariant(n_);
    case WeightKind::PolydiscBergman:
      if (domain_.kind() == DomainKind::FullSpace) return MeasureSpec::lebesgue(domain_);
      return MeasureSpec::polydisc_invariant(radii_);
  }
  return MeasureSpec::lebesgue(domain_);
}

std::string WeightSpec::name() const {
  switch (kind_) {
    case WeightKind::Fock: return "fock";
    case WeightKind::FockAniso: return "fock_aniso";
    case WeightKind::BallBergman: return "ball";
    case WeightKind::PolydiscBergman: return "polydisc";
  }
  return "?";
}

double weight(const WeightSpec& w, const CPoint& z) {
  if (z.dim() != w.dim()) throw DimensionError("weight: dimension mismatch");
  require_inside(w.domain(), z, "weight");
  switch (w.kind()) {
    case WeightKind::Fock: return 0.5 * w.alpha() * norm2(z);
    case WeightKind::FockAniso: {
      double s = 0.0;
      for (std::size_t j = 0; j < z.dim(); ++j) s += 0.5 * w.alphas()[j] * std::norm(z[j]);
      return s;
    }
    case WeightKind::BallBergman: {
      const double n = static_cast<double>(w.dim());
      return -((w.alpha() + n + 1.0) / w.p()) * std::log1p(-norm2(z));
    }
    case WeightKind::PolydiscBergman: {
      double s = 0.0;
      for (std::size_t j = 0; j < z.dim(); ++j) {
        const double r = w.radii()[j];
        const double a = w.alphas()[j];
        if (std::isfinite(r))
          s -= ((a + 2.0) / w.p()) * std::log1p(-std::norm(z[j]) / (r * r));
        else
          s += 0.5 * a * std::norm(z[j]);
      }
      return s;
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------

SpaceSpec::SpaceSpec(WeightSpec weight, double p)
    : weight_(std::move(weight)), measure_(weight_.natural_measure()), p_(p) {
  if (!(p_ > 0.0) || std::isnan(p_)) throw std::invalid_argument("space: p must be in (0, inf]");
  const bool bergman = weight_.kind() == WeightKind::BallBergman || weight_.kind() == WeightKind::PolydiscBergman;
  if (bergman && weight_.p() != p_)
    throw std::invalid_argument("space: p differs from the p the weight was built for");
  if (!finite_p()) {
    n_ = std::numeric_limits<double>::quiet_NaN();
    log_n_ = n_;
    return;
  }
  std::vector<LawBlock> blocks;
  switch (weight_.kind()) {
    case WeightKind::Fock:
    case WeightKind::FockAniso:
      for (std::size_t j = 0; j < dim(); ++j) blocks.push_back(LawBlock::gaussian(j, 0.5 * p_ * weight_.alpha(j)));
      break;
    case WeightKind::BallBergman:
      blocks.push_back(LawBlock::ball(0, dim(), 1.0, weight_.alpha()));
      break;
    case WeightKind::PolydiscBergman:
      for (std::size_t j = 0; j < dim(); ++j) {
        const double r = weight_.radii()[j];
        if (std::isfinite(r))
          blocks.push_back(LawBlock::ball(j, 1, r, weight_.alpha(j)));
        else
          blocks.push_back(LawBlock::gaussian(j, 0.5 * p_ * weight_.alpha(j)));
      }
      break;
  }
  law_ = ProductLaw(std::move(blocks));
  log_n_ = law_.log_mass();
  n_ = std::exp(log_n_);
  if (!(n_ > 0.0) || !std::isfinite(n_)) throw std::invalid_argument("space: normalization integral is not finite and positive");
}

SpaceSpec SpaceSpec::fock(std::size_t n, double alpha, double p) { return SpaceSpec(WeightSpec::fock(n, alpha), p); }

SpaceSpec SpaceSpec::ball(std::size_t n, double alpha, double p) {
  return SpaceSpec(WeightSpec::ball_bergman(n, alpha, p), p);
}

SpaceSpec SpaceSpec::polydisc(std::vector<double> alphas, double p, std::vector<double> radii) {
  return SpaceSpec(WeightSpec::polydisc_bergman(std::move(alphas), p, std::move(radii)), p);
}

bool SpaceSpec::finite_p() const { return std::isfinite(p_); }

const ProductLaw& SpaceSpec::law() const {
  if (!finite_p()) throw std::logic_error("space: no reference law for p = inf");
  return law_;
}

std::string SpaceSpec::id() const {
  std::string s = weight_.name() + "-n" + std::to_string(dim()) + "-a";
  for (std::size_t i = 0; i < weight_.alphas().size(); ++i) s += (i ? "_" : "") + fmt_num(weight_.alphas()[i]);
  if (weight_.kind() == WeightKind::PolydiscBergman) {
    s += "-r";
    for (std::size_t i = 0; i < weight_.radii().size(); ++i) s += (i ? "_" : "") + fmt_num(weight_.radii()[i]);
  }
  if (weight_.kind() == WeightKind::FockAniso && weight_.blocks().size() != dim()) {
    s += "-b";
    for (std::size_t i = 0; i < weight_.blocks().size(); ++i) s += (i ? "_" : "") + std::to_string(weight_.blocks()[i]);
  }
  return s + "-p" + fmt_num(p_);
}

IntegrationResult normalization(const SpaceSpec& s) {
  if (!s.finite_p()) throw std::invalid_argument("normalization: p must be finite");
  IntegrationResult r;
  r.value = s.normalization();
  r.error = 8.0 * std::numeric_limits<double>::epsilon() * r.value;
  r.method = "closed-form";
  r.budget_used = 0;
  r.converged = true;
  return r;
}

// ---------------------------------------------------------------------------

HoloFunction psi_representative(const WeightSpec& w, const Automorphism& a) {
  if (w.dim() != a.dim()) throw DimensionError("psi_representative: dimension mismatch");
  const std::size_t n = w.dim();
  const CPoint& z0 = a.z0();
  switch (w.kind()) {
    case WeightKind::Fock:
    case WeightKind::FockAniso: {
      if (a.kind() != AutomorphismKind::Translation)
        throw std::invalid_argument("psi_representative: Fock weights pair with translations");
      // exp(-sum_j alpha_j |z0_j|^2 / 2 - sum_j alpha_j z_j conj(z0_j))
      std::vector<Complex> b(n);
      double c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        b[j] = -w.alpha(j) * std::conj(z0[j]);
        c -= 0.5 * w.alpha(j) * std::norm(z0[j]);
      }
      return HoloFunction::exponential(std::move(b), std::exp(c)).with_label("psi");
    }
    case WeightKind::BallBergman: {
      if (a.kind() != AutomorphismKind::BallMobius)
        throw std::invalid_argument("psi_representative: ball weights pair with ball Mobius maps");
      // ((1 - |z0|^2) / (1 - <z, z0>)^2)^s
      const double s = (w.alpha() + static_cast<double>(n) + 1.0) / w.p();
      std::vector<PolyExpTerm> terms{{1.0, std::vector<int>(n, 0), std::vector<Complex>(n, 0.0)}};
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<int> k(n, 0);
        k[j] = 1;
        terms.push_back({-std::conj(z0[j]), k, std::vector<Complex>(n, 0.0)});
      }
      auto base = HoloFunction::poly_exp(n, std::move(terms), "1-<z,z0>");
      const double c = std::pow(1.0 - norm2(z0), s);
      return HoloFunction::product({HoloFunction::constant(n, c), HoloFunction::power(base, -2.0 * s)}, "psi");
    }
    case WeightKind::PolydiscBergman: {
      if (a.kind() != AutomorphismKind::PolydiscMobius || a.radii() != w.radii())
        throw std::invalid_argument("psi_representative: polydisc weights pair with polydisc Mobius maps on the same radii");
      std::vector<HoloFunction> factors;
      double c = 0.0;
      std::vector<Complex> b(n, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        const double r = w.radii()[j];
        const double aj = w.alpha(j);
        if (!std::isfinite(r)) {
          b[j] = -aj * std::conj(z0[j]);
          c -= 0.5 * aj * std::norm(z0[j]);
          continue;
        }
        const double s = (aj + 2.0) / w.p();
        const double r2 = r * r;
        std::vector<int> k(n, 0);
        k[j] = 1;
        auto base = HoloFunction::poly_exp(
            n, {{1.0, std::vector<int>(n, 0), std::vector<Complex>(n, 0.0)}, {-std::conj(z0[j]) / r2, k, std::vector<Complex>(n, 0.0)}},
            "1-z" + std::to_string(j + 1) + "conj(z0)");
        c += s * std::log1p(-std::norm(z0[j]) / r2);
        factors.push_back(HoloFunction::power(base, -2.0 * s));
      }
      factors.insert(factors.begin(), HoloFunction::exponential(std::move(b), std::exp(c)));
      return HoloFunction::product(std::move(factors), "psi");
    }
  }
  throw std::logic_error("psi_representative: unknown weight");
}

double laplacian_residual(const std::function<double(const CPoint&)>& g, const DomainSpec& domain, const CPoint& z,
                          const CPoint& dir, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("laplacian_residual: h must be > 0");
  const Complex steps[4] = {h, -h, Complex(0.0, h), Complex(0.0, -h)};
  double s = -4.0 * g(z);
  for (const Complex& st : steps) {
    const CPoint zp = z + dir * st;
    if (!contains(domain, zp, 0.0)) throw DomainError("laplacian_residual: stencil leaves the domain");
    s += g(zp);
  }
  return s / (h * h);
}

double pluriharmonicity_residual(const WeightSpec& w, const Automorphism& a, const CPoint& z, const CPoint& dir,
                                 double h) {
  if (w.dim() != a.dim()) throw DimensionError("pluriharmonicity_residual: dimension mismatch");
  auto g = [&](const CPoint& x) { return weight(w, x) - weight(w, a.apply(x)); };
  return laplacian_residual(g, w.domain(), z, dir, h);
}

}  // namespace holobound
