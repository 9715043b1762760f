#include "cavitylz/model.hpp"

#include "cavitylz/constants.hpp"
#include "cavitylz/errors.hpp"

namespace cavitylz::model {

DimensionlessGroups derive_dimensionless(double gap, double sweep_rate,
                                         double omega_av) {
  if (!(gap > 0.0)) {
    throw DomainError("derive_dimensionless: gap must be positive");
  }
  if (!(omega_av > 0.0)) {
    throw DomainError("derive_dimensionless: omega_av must be positive");
  }
  if (sweep_rate < 0.0) {
    throw DomainError("derive_dimensionless: sweep rate must be >= 0");
  }
  DimensionlessGroups g;
  g.theta_tilde = hbar * sweep_rate / (gap * gap);
  g.delta_ratio = gap / (hbar * omega_av);
  return g;
}

}  // namespace cavitylz::model
