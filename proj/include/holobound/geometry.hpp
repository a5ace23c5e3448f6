#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace holobound {

using Complex = std::complex<double>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a principal-branch power is evaluated where its base is zero
/// or lies on the negative real axis.
struct BranchError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A point of C^n (n >= 1, finite coordinates).
class CPoint {
 public:
  CPoint() = default;
  explicit CPoint(std::vector<Complex> coords);
  CPoint(std::initializer_list<Complex> coords);

  static CPoint zero(std::size_t n);

  std::size_t dim() const { return coords_.size(); }
  const Complex& operator[](std::size_t j) const { return coords_[j]; }
  Complex& operator[](std::size_t j) { return coords_[j]; }
  const std::vector<Complex>& coords() const { return coords_; }

  CPoint operator+(const CPoint& other) const;
  CPoint operator-(const CPoint& other) const;
  CPoint operator*(Complex s) const;

  bool operator==(const CPoint& other) const = default;

 private:
  std::vector<Complex> coords_;
};

/// Hermitian product sum_j z_j * conj(w_j).
Complex inner(const CPoint& z, const CPoint& w);
/// |z|^2.
double norm2(const CPoint& z);
double norm(const CPoint& z);

/// coeff * z^powers * exp(sum_j expvec_j z_j)
struct PolyExpTerm {
  Complex coeff;
  std::vector<int> powers;
  std::vector<Complex> expvec;
};

using PointMap = std::function<CPoint(const CPoint&)>;

/// Holomorphic function on a domain of C^n.
///
/// Either a finite poly-exp sum (closed under translation, see
/// compose_translation) or a composed evaluator: a base composed with a
/// point map, a principal-branch power of a zero-free base, or a product.
/// Instances are immutable and cheap to copy.
class HoloFunction {
 public:
  static HoloFunction poly_exp(std::size_t n, std::vector<PolyExpTerm> terms,
                               std::string label = {});
  static HoloFunction constant(std::size_t n, Complex c);
  /// z -> z_j
  static HoloFunction coordinate(std::size_t n, std::size_t j);
  /// z -> exp(sum_j b_j z_j)
  static HoloFunction exponential(std::vector<Complex> b, Complex coeff = 1.0);

  /// base o map. `map` must send the domain of the result into the domain of base.
  static HoloFunction composed(HoloFunction base, PointMap map, std::string label);
  /// Principal branch base^exponent. base must be zero-free on the domain.
  static HoloFunction power(HoloFunction base, Complex exponent, std::string label = {});
  static HoloFunction product(std::vector<HoloFunction> factors, std::string label = {});

  Complex operator()(const CPoint& z) const { return eval(z); }
  Complex eval(const CPoint& z) const;
  /// Complex logarithm of f(z) computed without forming f(z); real part is
  /// ln|f(z)| (-inf at zeros). The imaginary part is some branch of arg.
  Complex log_eval(const CPoint& z) const;
  double log_abs(const CPoint& z) const { return log_eval(z).real(); }

  std::size_t dim() const;
  const std::string& label() const;
  bool is_poly_exp() const;
  /// Terms of a poly-exp sum; throws for composed forms.
  const std::vector<PolyExpTerm>& terms() const;
  /// True when the function is known not to vanish anywhere (exponential
  /// monomials, powers, products and compositions of such).
  bool zero_free() const;

  HoloFunction scaled(Complex c) const;
  HoloFunction with_label(std::string label) const;

  struct Node;

 private:
  explicit HoloFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Exact poly-exp expansion of z -> f(z + shift).
HoloFunction compose_translation(const HoloFunction& f, const CPoint& shift);

}  // namespace holobound
