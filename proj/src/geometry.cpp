#include "holobound/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <variant>

namespace holobound {

namespace {

void check_finite(const std::vector<Complex>& coords) {
  if (coords.empty()) throw DimensionError("CPoint: dimension must be >= 1");
  for (const auto& c : coords) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("CPoint: non-finite coordinate");
  }
}

void check_same_dim(const CPoint& z, const CPoint& w) {
  if (z.dim() != w.dim())
    throw DimensionError("dimension mismatch: " + std::to_string(z.dim()) + " vs " +
                         std::to_string(w.dim()));
}

Complex ipow(Complex base, int k) {
  Complex r = 1.0;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Reduce an angle into (-pi, pi].
double principal_angle(double theta) {
  double r = std::remainder(theta, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

}  // namespace

CPoint::CPoint(std::vector<Complex> coords) : coords_(std::move(coords)) { check_finite(coords_); }

CPoint::CPoint(std::initializer_list<Complex> coords) : coords_(coords) { check_finite(coords_); }

CPoint CPoint::zero(std::size_t n) { return CPoint(std::vector<Complex>(n, 0.0)); }

CPoint CPoint::operator+(const CPoint& other) const {
  check_same_dim(*this, other);
  std::vector<Complex> out(dim());
  for (std::size_t j = 0; j < dim(); ++j) out[j] = coords_[j] + other.coords_[j];
  return CPoint(std::move(out));
}

CPoint CPoint::operator-(const CPoint& other) const {
  check_same_dim(*this, other);
  std::vector<Complex> out(dim());
  for (std::size_t j = 0; j < dim(); ++j) out[j] = coords_[j] - other.coords_[j];
  return CPoint(std::move(out));
}

CPoint CPoint::operator*(Complex s) const {
  std::vector<Complex> out(dim());
  for (std::size_t j = 0; j < dim(); ++j) out[j] = coords_[j] * s;
  return CPoint(std::move(out));
}

Complex inner(const CPoint& z, const CPoint& w) {
  check_same_dim(z, w);
  Complex s = 0.0;
  for (std::size_t j = 0; j < z.dim(); ++j) s += z[j] * std::conj(w[j]);
  return s;
}

double norm2(const CPoint& z) {
  double s = 0.0;
  for (const auto& c : z.coords()) s += std::norm(c);
  return s;
}

double norm(const CPoint& z) { return std::sqrt(norm2(z)); }

// ---------------------------------------------------------------------------

struct PolyExpSum {
  std::vector<PolyExpTerm> terms;
};
struct Composed {
  HoloFunction base;
  PointMap map;
};
struct Power {
  HoloFunction base;
  Complex exponent;
};
struct Product {
  std::vector<HoloFunction> factors;
};

struct HoloFunction::Node {
  std::size_t n;
  std::string label;
  std::variant<PolyExpSum, Composed, Power, Product> body;
};

namespace {

Complex eval_term(const PolyExpTerm& t, const CPoint& z) {
  Complex v = t.coeff;
  Complex e = 0.0;
  for (std::size_t j = 0; j < z.dim(); ++j) {
    v *= ipow(z[j], t.powers[j]);
    e += t.expvec[j] * z[j];
  }
  return v * std::exp(e);
}

// log of one term; real part -inf when the term vanishes at z.
Complex log_term(const PolyExpTerm& t, const CPoint& z) {
  Complex v = t.coeff;
  Complex e = 0.0;
  for (std::size_t j = 0; j < z.dim(); ++j) {
    if (t.powers[j] > 0) v *= ipow(z[j], t.powers[j]);
    e += t.expvec[j] * z[j];
  }
  const double a = std::abs(v);
  if (a > 1e-250 && a < 1e250) return std::log(v) + e;
  Complex l = std::log(t.coeff);
  for (std::size_t j = 0; j < z.dim(); ++j) {
    if (t.powers[j] > 0) {
      if (z[j] == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
      l += static_cast<double>(t.powers[j]) * std::log(z[j]);
    }
  }
  return l + e;
}

Complex log_sum(const std::vector<PolyExpTerm>& terms, const CPoint& z) {
  constexpr double ninf = -std::numeric_limits<double>::infinity();
  if (terms.empty()) return {ninf, 0.0};
  if (terms.size() == 1) return log_term(terms.front(), z);
  constexpr std::size_t kStack = 8;
  Complex stack[kStack];
  std::vector<Complex> heap;
  Complex* logs = stack;
  if (terms.size() > kStack) {
    heap.resize(terms.size());
    logs = heap.data();
  }
  double m = ninf;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    logs[i] = log_term(terms[i], z);
    m = std::max(m, logs[i].real());
  }
  if (m == ninf) return {ninf, 0.0};
  Complex s = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (logs[i].real() == ninf) continue;
    s += std::exp(logs[i] - m);
  }
  if (s == 0.0) return {ninf, 0.0};
  return m + std::log(s);
}

void validate_terms(std::size_t n, const std::vector<PolyExpTerm>& terms) {
  for (const auto& t : terms) {
    if (t.powers.size() != n || t.expvec.size() != n)
      throw DimensionError("PolyExpTerm: powers/expvec must have length " + std::to_string(n));
    for (int k : t.powers)
      if (k < 0) throw std::invalid_argument("PolyExpTerm: negative power");
    if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag()))
      throw std::invalid_argument("PolyExpTerm: non-finite coefficient");
  }
}

// Merge terms with identical (powers, expvec) and drop zero coefficients.
std::vector<PolyExpTerm> canonical_terms(std::vector<PolyExpTerm> terms) {
  std::vector<PolyExpTerm> out;
  for (auto& t : terms) {
    auto it = std::find_if(out.begin(), out.end(), [&](const PolyExpTerm& o) {
      return o.powers == t.powers && o.expvec == t.expvec;
    });
    if (it == out.end())
      out.push_back(std::move(t));
    else
      it->coeff += t.coeff;
  }
  std::erase_if(out, [](const PolyExpTerm& t) { return t.coeff == 0.0; });
  return out;
}

}  // namespace

HoloFunction HoloFunction::poly_exp(std::size_t n, std::vector<PolyExpTerm> terms,
                                    std::string label) {
  if (n == 0) throw DimensionError("HoloFunction: dimension must be >= 1");
  validate_terms(n, terms);
  terms = canonical_terms(std::move(terms));
  if (label.empty()) label = "polyexp[" + std::to_string(terms.size()) + "]";
  return HoloFunction(
      std::make_shared<const Node>(Node{n, std::move(label), PolyExpSum{std::move(terms)}}));
}

HoloFunction HoloFunction::constant(std::size_t n, Complex c) {
  return poly_exp(n, {PolyExpTerm{c, std::vector<int>(n, 0), std::vector<Complex>(n, 0.0)}},
                  "const");
}

HoloFunction HoloFunction::coordinate(std::size_t n, std::size_t j) {
  if (j >= n) throw DimensionError("coordinate index out of range");
  std::vector<int> k(n, 0);
  k[j] = 1;
  return poly_exp(n, {PolyExpTerm{1.0, k, std::vector<Complex>(n, 0.0)}},
                  "z" + std::to_string(j + 1));
}

HoloFunction HoloFunction::exponential(std::vector<Complex> b, Complex coeff) {
  const std::size_t n = b.size();
  return poly_exp(n, {PolyExpTerm{coeff, std::vector<int>(n, 0), std::move(b)}}, "exp");
}

HoloFunction HoloFunction::composed(HoloFunction base, PointMap map, std::string label) {
  const std::size_t n = base.dim();
  return HoloFunction(std::make_shared<const Node>(
      Node{n, std::move(label), Composed{std::move(base), std::move(map)}}));
}

HoloFunction HoloFunction::power(HoloFunction base, Complex exponent, std::string label) {
  const std::size_t n = base.dim();
  if (label.empty()) label = "(" + base.label() + ")^s";
  return HoloFunction(
      std::make_shared<const Node>(Node{n, std::move(label), Power{std::move(base), exponent}}));
}

HoloFunction HoloFunction::product(std::vector<HoloFunction> factors, std::string label) {
  if (factors.empty()) throw std::invalid_argument("HoloFunction::product: no factors");
  const std::size_t n = factors.front().dim();
  for (const auto& f : factors)
    if (f.dim() != n) throw DimensionError("HoloFunction::product: dimension mismatch");
  if (label.empty()) {
    for (std::size_t i = 0; i < factors.size(); ++i)
      label += (i ? "*" : "") + factors[i].label();
  }
  return HoloFunction(
      std::make_shared<const Node>(Node{n, std::move(label), Product{std::move(factors)}}));
}

std::size_t HoloFunction::dim() const { return node_->n; }
const std::string& HoloFunction::label() const { return node_->label; }
bool HoloFunction::is_poly_exp() const { return std::holds_alternative<PolyExpSum>(node_->body); }

const std::vector<PolyExpTerm>& HoloFunction::terms() const {
  if (!is_poly_exp()) throw std::logic_error("HoloFunction: not a poly-exp sum");
  return std::get<PolyExpSum>(node_->body).terms;
}

bool HoloFunction::zero_free() const {
  return std::visit(
      [](const auto& b) -> bool {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, PolyExpSum>) {
          if (b.terms.size() != 1) return false;
          const auto& k = b.terms.front().powers;
          return std::all_of(k.begin(), k.end(), [](int x) { return x == 0; });
        } else if constexpr (std::is_same_v<T, Composed>) {
          return b.base.zero_free();
        } else if constexpr (std::is_same_v<T, Power>) {
          return true;
        } else {
          return std::all_of(b.factors.begin(), b.factors.end(),
                             [](const HoloFunction& f) { return f.zero_free(); });
        }
      },
      node_->body);
}

Complex HoloFunction::eval(const CPoint& z) const {
  if (z.dim() != dim()) throw DimensionError("HoloFunction::eval: dimension mismatch");
  return std::visit(
      [&](const auto& b) -> Complex {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, PolyExpSum>) {
          Complex s = 0.0;
          for (const auto& t : b.terms) s += eval_term(t, z);
          return s;
        } else if constexpr (std::is_same_v<T, Composed>) {
          return b.base.eval(b.map(z));
        } else if constexpr (std::is_same_v<T, Power>) {
          return std::exp(log_eval(z));
        } else {
          Complex s = 1.0;
          for (const auto& f : b.factors) s *= f.eval(z);
          return s;
        }
      },
      node_->body);
}

Complex HoloFunction::log_eval(const CPoint& z) const {
  if (z.dim() != dim()) throw DimensionError("HoloFunction::log_eval: dimension mismatch");
  return std::visit(
      [&](const auto& b) -> Complex {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, PolyExpSum>) {
          return log_sum(b.terms, z);
        } else if constexpr (std::is_same_v<T, Composed>) {
          return b.base.log_eval(b.map(z));
        } else if constexpr (std::is_same_v<T, Power>) {
          const Complex l = b.base.log_eval(z);
          if (!std::isfinite(l.real()))
            throw BranchError("power of '" + b.base.label() + "': base vanishes or overflows");
          const double arg = principal_angle(l.imag());
          if (arg == std::numbers::pi)
            throw BranchError("power of '" + b.base.label() + "': base on negative real axis");
          return b.exponent * Complex(l.real(), arg);
        } else {
          Complex s = 0.0;
          for (const auto& f : b.factors) s += f.log_eval(z);
          return s;
        }
      },
      node_->body);
}

HoloFunction HoloFunction::scaled(Complex c) const {
  if (is_poly_exp()) {
    auto t = terms();
    for (auto& term : t) term.coeff *= c;
    return poly_exp(dim(), std::move(t), label());
  }
  return product({constant(dim(), c), *this}, label());
}

HoloFunction HoloFunction::with_label(std::string label) const {
  auto node = std::make_shared<Node>(*node_);
  node->label = std::move(label);
  return HoloFunction(std::move(node));
}

HoloFunction compose_translation(const HoloFunction& f, const CPoint& shift) {
  if (shift.dim() != f.dim()) throw DimensionError("compose_translation: dimension mismatch");
  const std::size_t n = f.dim();
  std::vector<PolyExpTerm> out;
  for (const auto& t : f.terms()) {
    Complex base = t.coeff;
    for (std::size_t j = 0; j < n; ++j) base *= std::exp(t.expvec[j] * shift[j]);
    // Expand prod_j (z_j + s_j)^{k_j} over all multi-indices m <= k.
    std::vector<int> m(n, 0);
    while (true) {
      Complex c = base;
      for (std::size_t j = 0; j < n; ++j)
        c *= binomial(t.powers[j], m[j]) * ipow(shift[j], t.powers[j] - m[j]);
      out.push_back(PolyExpTerm{c, m, t.expvec});
      std::size_t j = 0;
      while (j < n && m[j] == t.powers[j]) m[j++] = 0;
      if (j == n) break;
      ++m[j];
    }
  }
  return HoloFunction::poly_exp(n, std::move(out), f.label() + "(.+s)");
}

}  // namespace holobound
