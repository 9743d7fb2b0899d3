#include "fim/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fim/errors.hpp"
#include "fim/linalg.hpp"
#include "fim/roots.hpp"

namespace fim {

namespace {
using cplx = std::complex<double>;
}

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw ArgumentError("Polynomial: non-finite coefficient");
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

std::vector<double> Polynomial::series_coefficients() const {
  std::vector<double> full(coeffs_.size() + 1);
  full[0] = 1.0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) full[j + 1] = -coeffs_[j];
  return full;
}

double Polynomial::coefficient_scale() const {
  double s = 1.0;
  for (double c : coeffs_) s = std::max(s, std::abs(c));
  return s;
}

double InverseRootSet::max_modulus() const {
  double m = 0.0;
  for (const cplx &g : roots) m = std::max(m, std::abs(g));
  return m;
}

std::complex<double> eval(const Polynomial &p, std::complex<double> x) {
  const std::vector<double> full = p.series_coefficients();
  cplx acc = full.back();
  for (std::size_t k = full.size() - 1; k-- > 0;) acc = acc * x + full[k];
  return acc;
}

namespace {

// Expands prod(1 - G_j B) as complex series coefficients (length d+1).
std::vector<cplx> expand_product(const std::vector<cplx> &roots) {
  std::vector<cplx> full{cplx(1.0, 0.0)};
  for (const cplx &g : roots) {
    std::vector<cplx> next(full.size() + 1, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < full.size(); ++k) {
      next[k] += full[k];
      next[k + 1] -= g * full[k];
    }
    full = std::move(next);
  }
  return full;
}

}  // namespace

InverseRootSet inverse_roots(const Polynomial &p, double tol_reconstruct) {
  InverseRootSet set;
  set.tol_used = tol_reconstruct;
  const int d = p.degree();
  if (d == 0) return set;

  // Inverse roots are the eigenvalues of the companion matrix of
  // z^d - c_1 z^(d-1) - ... - c_d.
  std::vector<double> monic(d);
  for (int k = 0; k < d; ++k) monic[k] = -p.coeff(d - k);
  set.roots = companion_eigenvalues(monic);

  const std::vector<cplx> recon = expand_product(set.roots);
  const std::vector<double> full = p.series_coefficients();
  double err = 0.0;
  for (int k = 0; k <= d; ++k) err = std::max(err, std::abs(recon[k] - full[k]));
  set.reconstruction_error = err / p.coefficient_scale();
  if (set.reconstruction_error > tol_reconstruct) {
    std::ostringstream msg;
    msg << "inverse_roots: reconstruction error " << set.reconstruction_error
        << " exceeds tolerance " << tol_reconstruct
        << " (max coefficient deviation " << err << ")";
    throw NumericalError(msg.str());
  }
  return set;
}

Polynomial from_inverse_roots(const std::vector<std::complex<double>> &roots, double tol) {
  const std::vector<cplx> full = expand_product(roots);
  double scale = 1.0;
  for (const cplx &c : full) scale = std::max(scale, std::abs(c));
  std::vector<double> coeffs(roots.size());
  for (std::size_t k = 1; k < full.size(); ++k) {
    if (std::abs(full[k].imag()) > tol * scale)
      throw NumericalError("from_inverse_roots: root multiset is not conjugate-closed");
    coeffs[k - 1] = -full[k].real();
  }
  return Polynomial(coeffs);
}

Polynomial multiply(const Polynomial &a, const Polynomial &b) {
  const std::vector<double> fa = a.series_coefficients();
  const std::vector<double> fb = b.series_coefficients();
  std::vector<double> conv(fa.size() + fb.size() - 1, 0.0);
  for (std::size_t i = 0; i < fa.size(); ++i)
    for (std::size_t j = 0; j < fb.size(); ++j) conv[i + j] += fa[i] * fb[j];
  std::vector<double> coeffs(conv.size() - 1);
  for (std::size_t k = 1; k < conv.size(); ++k) coeffs[k - 1] = -conv[k];
  return Polynomial(coeffs);
}

namespace detail {

// Synthetic division by (1 - gB), no root-membership check.  The remainder
// (proportional to p(1/g)) is dropped.
Polynomial divide_linear(const Polynomial &p, double g) {
  const std::vector<double> full = p.series_coefficients();
  const int d = p.degree();
  std::vector<double> quot(d);  // series coefficients b_0..b_{d-1}
  quot[0] = 1.0;
  for (int k = 1; k < d; ++k) quot[k] = full[k] + g * quot[k - 1];
  std::vector<double> coeffs(d - 1);
  for (int k = 1; k < d; ++k) coeffs[k - 1] = -quot[k];
  return Polynomial(coeffs);
}

// Joint synthetic division by (1 - gB)(1 - conj(g)B) = 1 - 2Re(g)B + |g|^2 B^2.
Polynomial divide_quadratic(const Polynomial &p, cplx g) {
  const std::vector<double> full = p.series_coefficients();
  const int d = p.degree();
  const double t1 = 2.0 * g.real();
  const double t2 = std::norm(g);
  std::vector<double> quot(d - 1, 0.0);
  quot[0] = 1.0;
  for (int k = 1; k < d - 1; ++k) {
    double b = full[k] + t1 * quot[k - 1];
    if (k >= 2) b -= t2 * quot[k - 2];
    quot[k] = b;
  }
  std::vector<double> coeffs(d - 2);
  for (int k = 1; k < d - 1; ++k) coeffs[k - 1] = -quot[k];
  return Polynomial(coeffs);
}

}  // namespace detail

Polynomial deflate(const Polynomial &p, std::complex<double> g, double tol) {
  const int d = p.degree();
  const bool complex_pair = g.imag() != 0.0;
  if (d < (complex_pair ? 2 : 1))
    throw PreconditionError("deflate: polynomial degree too small for the requested factor");
  if (std::abs(g) == 0.0)
    throw PreconditionError("deflate: zero is never an inverse root (constant term is 1)");

  const cplx x = 1.0 / g;
  const cplx residual = eval(p, x);
  // Horner magnitude of p at x bounds the attainable evaluation noise.
  const std::vector<double> full = p.series_coefficients();
  double scale = 0.0;
  double xpow = 1.0;
  for (double c : full) {
    scale += std::abs(c) * xpow;
    xpow *= std::abs(x);
  }
  if (std::abs(residual) > tol * scale) {
    std::ostringstream msg;
    msg << "deflate: g = (" << g.real() << ", " << g.imag()
        << ") is not an inverse root within tolerance: |p(1/g)| = " << std::abs(residual)
        << " > " << tol * scale;
    throw PreconditionError(msg.str());
  }
  Polynomial quotient =
      complex_pair ? detail::divide_quadratic(p, g) : detail::divide_linear(p, g.real());

  // Verify the postcondition multiply(quotient, factor) ~ p.  The evaluation
  // check above can miss a conjugate-pair division where only one of the two
  // factors is actually present; the multiply-back residual cannot.
  const Polynomial factor = complex_pair
                                ? Polynomial({2.0 * g.real(), -std::norm(g)})
                                : Polynomial({g.real()});
  const std::vector<double> recon = multiply(quotient, factor).series_coefficients();
  double dev = 0.0;
  for (int k = 0; k <= d; ++k)
    dev = std::max(dev, std::abs((k < static_cast<int>(recon.size()) ? recon[k] : 0.0) - full[k]));
  if (dev > std::max(tol, 1e-14) * p.coefficient_scale()) {
    std::ostringstream msg;
    msg << "deflate: factor does not divide the polynomial (multiply-back deviation " << dev
        << ")";
    throw PreconditionError(msg.str());
  }
  return quotient;
}

bool is_stationary(const Polynomial &p, double margin) {
  if (margin < 0.0 || margin >= 1.0) throw ArgumentError("is_stationary: margin must be in [0, 1)");
  if (p.degree() == 0) return true;
  std::vector<double> monic(p.degree());
  for (int k = 0; k < p.degree(); ++k) monic[k] = -p.coeff(p.degree() - k);
  for (const cplx &g : companion_eigenvalues(monic))
    if (!(std::abs(g) < 1.0 - margin)) return false;
  return true;
}

double sylvester_resultant(const Polynomial &a, const Polynomial &b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da + db == 0)
    throw ArgumentError("sylvester_resultant: undefined for two constant polynomials");
  const std::vector<double> fa = a.series_coefficients();
  const std::vector<double> fb = b.series_coefficients();
  Matrix s(da + db, da + db);
  for (int i = 0; i < db; ++i)
    for (int k = 0; k <= da; ++k) s(i, i + k) = fa[k];
  for (int i = 0; i < da; ++i)
    for (int k = 0; k <= db; ++k) s(db + i, i + k) = fb[k];
  return lu_determinant(std::move(s));
}

std::vector<double> ScaledPolynomial::series_coefficients() const {
  std::vector<double> full = poly.series_coefficients();
  for (double &c : full) c *= scale;
  return full;
}

}  // namespace fim
