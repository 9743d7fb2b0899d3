#ifndef FIM_MODEL_HPP
#define FIM_MODEL_HPP

#include "fim/polynomial.hpp"

namespace fim {

/// Default stationarity/invertibility margin for model validation.
inline constexpr double kDefaultStationarityMargin = 1e-6;

/// An ARMA(p, q) model phi(B) z_t = theta(B) a_t, with both operator
/// polynomials in the Box-Jenkins convention (see Polynomial).  Construction
/// validates that every inverse root of phi and theta has modulus strictly
/// below 1 - margin, and caches the certified root sets.
class ArmaModel {
 public:
  ArmaModel(Polynomial phi, Polynomial theta, double margin = kDefaultStationarityMargin,
            double tol_reconstruct = kDefaultReconstructTol);

  const Polynomial &phi() const { return phi_; }
  const Polynomial &theta() const { return theta_; }
  int p() const { return phi_.degree(); }
  int q() const { return theta_.degree(); }
  double margin() const { return margin_; }

  const InverseRootSet &phi_roots() const { return phi_roots_; }
  const InverseRootSet &theta_roots() const { return theta_roots_; }

  /// Largest inverse-root modulus across both polynomials (0 when p = q = 0).
  double max_root_modulus() const;

 private:
  Polynomial phi_;
  Polynomial theta_;
  double margin_;
  InverseRootSet phi_roots_;
  InverseRootSet theta_roots_;
};

}  // namespace fim

#endif  // FIM_MODEL_HPP
