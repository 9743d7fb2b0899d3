#ifndef FIM_POLYNOMIAL_HPP
#define FIM_POLYNOMIAL_HPP

#include <complex>
#include <vector>

namespace fim {

/// Default relative tolerance for the root-product reconstruction check.
inline constexpr double kDefaultReconstructTol = 1e-8;
/// Default relative tolerance for root-membership checks (deflation).
inline constexpr double kDefaultMembershipTol = 1e-8;

/// Operator polynomial in the backshift operator B with the Box-Jenkins sign
/// convention used throughout this library:
///
///   stored coefficients (c_1, ..., c_d) represent  1 - c_1 B - ... - c_d B^d.
///
/// So Polynomial({0.8, -0.15}) is 1 - 0.8B + 0.15B^2.  The constant term is
/// always 1 and is never stored.  Trailing zero coefficients are trimmed on
/// construction so that the degree is exact.
class Polynomial {
 public:
  /// The constant polynomial 1 (degree zero).
  Polynomial() = default;

  /// Builds 1 - coeffs[0] B - ... - coeffs[d-1] B^d, trimming exact trailing
  /// zeros.  Throws ArgumentError on non-finite coefficients.
  explicit Polynomial(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()); }

  /// Box-Jenkins coefficients (c_1, ..., c_d).
  const std::vector<double> &coeffs() const { return coeffs_; }

  /// c_j for j in 1..degree.
  double coeff(int j) const { return coeffs_[j - 1]; }

  /// Power-series coefficients (1, -c_1, ..., -c_d) of length degree+1.
  std::vector<double> series_coefficients() const;

  /// max(1, max_j |c_j|): the coefficient scale used by relative tolerances.
  double coefficient_scale() const;

  bool operator==(const Polynomial &other) const = default;

 private:
  std::vector<double> coeffs_;
};

/// Inverse roots G_1..G_d of a polynomial: p(B) = prod_j (1 - G_j B).
/// Sorted lexicographically by (real, imaginary); complex members occur in
/// exact conjugate pairs.
struct InverseRootSet {
  std::vector<std::complex<double>> roots;
  double tol_used = kDefaultReconstructTol;
  /// Max coefficientwise deviation of prod(1 - G_j B) from the source,
  /// relative to the coefficient scale.
  double reconstruction_error = 0.0;

  double max_modulus() const;
};

/// p(x) = 1 - c_1 x - ... - c_d x^d by Horner evaluation.
std::complex<double> eval(const Polynomial &p, std::complex<double> x);

/// Factors p into inverse roots and certifies the factorization by
/// re-expanding the product.  Throws NumericalError when the relative
/// reconstruction error exceeds tol_reconstruct (e.g. badly conditioned
/// repeated roots), naming the max coefficient deviation.
InverseRootSet inverse_roots(const Polynomial &p, double tol_reconstruct = kDefaultReconstructTol);

/// Expands prod_j (1 - roots[j] B) back into a Polynomial.  The multiset must
/// be closed under conjugation; the imaginary residue of the expansion is
/// checked against tol.
Polynomial from_inverse_roots(const std::vector<std::complex<double>> &roots, double tol = 1e-9);

/// Coefficient convolution: degree(a*b) = degree(a) + degree(b).
Polynomial multiply(const Polynomial &a, const Polynomial &b);
inline Polynomial operator*(const Polynomial &a, const Polynomial &b) { return multiply(a, b); }

/// Removes the factor (1 - gB) by synthetic division; for non-real g the
/// conjugate factor is removed jointly (degree drops by 2) so the result has
/// real coefficients.  Precondition: g is an inverse root of p, checked as
/// |p(1/g)| <= tol * scale with the Horner magnitude scale of p at 1/g.
/// Throws PreconditionError reporting |p(1/g)| otherwise.
Polynomial deflate(const Polynomial &p, std::complex<double> g,
                   double tol = kDefaultMembershipTol);

/// True iff every inverse root satisfies |G_j| < 1 - margin.
/// margin must lie in [0, 1).
bool is_stationary(const Polynomial &p, double margin = 0.0);

/// Determinant of the (deg a + deg b)-square Sylvester matrix of the two full
/// coefficient vectors in ascending powers of B, deg(b) rows of a's
/// coefficients on top of deg(a) rows of b's.  With that convention
/// res(1 - 0.5B, 1 - 0.4B) = +0.1.  Zero exactly when the polynomials share
/// a root.  Throws ArgumentError when both degrees are zero.
double sylvester_resultant(const Polynomial &a, const Polynomial &b);

/// A scalar multiple of an operator polynomial, used where a general constant
/// term is needed (cancelling polynomials of a null certificate).
struct ScaledPolynomial {
  double scale = 1.0;
  Polynomial poly;

  /// Power-series coefficients scale * (1, -c_1, ..., -c_d).
  std::vector<double> series_coefficients() const;
  int degree() const { return poly.degree(); }
};

}  // namespace fim

#endif  // FIM_POLYNOMIAL_HPP
