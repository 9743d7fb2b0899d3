#ifndef FIM_ROOTS_HPP
#define FIM_ROOTS_HPP

#include <complex>
#include <vector>

namespace fim {

/// Eigenvalues of the companion matrix of the monic polynomial
///   z^d + m[d-1] z^(d-1) + ... + m[1] z + m[0],
/// computed by balancing followed by Francis double-shift QR on the
/// Hessenberg form.  Complex eigenvalues come out as exact conjugate
/// pairs; real eigenvalues have imaginary part exactly zero.
/// Throws NumericalError if the QR iteration fails to converge.
std::vector<std::complex<double>> companion_eigenvalues(const std::vector<double> &monic);

}  // namespace fim

#endif  // FIM_ROOTS_HPP
