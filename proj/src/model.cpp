#include "fim/model.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "fim/errors.hpp"

namespace fim {

namespace {

void check_roots(const char *name, const InverseRootSet &roots, double margin) {
  std::ostringstream offending;
  int count = 0;
  for (const std::complex<double> &g : roots.roots) {
    if (!(std::abs(g) < 1.0 - margin)) {
      if (count++) offending << ", ";
      offending << "(" << g.real() << (g.imag() < 0 ? " - " : " + ")
                << std::abs(g.imag()) << "i), modulus " << std::abs(g);
    }
  }
  if (count) {
    std::ostringstream msg;
    msg << name << " is nonstationary/noninvertible at margin " << margin
        << ": offending inverse root" << (count > 1 ? "s " : " ") << offending.str();
    throw StationarityError(msg.str());
  }
}

}  // namespace

ArmaModel::ArmaModel(Polynomial phi, Polynomial theta, double margin, double tol_reconstruct)
    : phi_(std::move(phi)), theta_(std::move(theta)), margin_(margin) {
  if (!(margin > 0.0) || margin >= 1.0)
    throw ArgumentError("ArmaModel: stationarity margin must be in (0, 1)");
  phi_roots_ = inverse_roots(phi_, tol_reconstruct);
  theta_roots_ = inverse_roots(theta_, tol_reconstruct);
  check_roots("phi", phi_roots_, margin_);
  check_roots("theta", theta_roots_, margin_);
}

double ArmaModel::max_root_modulus() const {
  return std::max(phi_roots_.max_modulus(), theta_roots_.max_modulus());
}

}  // namespace fim
