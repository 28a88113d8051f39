#pragma once

#include <string>

#include "phgosc/phg_series.hpp"

namespace phgosc {

// phi = exp(-sigma^2), independent of r.
PhgProfile gaussian_profile();
// phi = exp(-sigma^2) / (2 (1 + sigma^2 r^2)), poles at sigma = +-i/r.
PhgProfile example_profile();
// phi = exp(-(sigma r)^2): a function of lambda = sigma r only.
PhgProfile lambda_gaussian_profile();
// phi = exp(-sigma) chi(sigma), chi = 1 on [0, 1] and 0 beyond 3.
PhgProfile bump_profile();
// w_mid * example_profile, supported away from sigma = 0 and sigma r small.
PhgProfile example_mid_profile();
// w_high * base: vanishes for sigma <= 1, equals base for sigma >= 2.
PhgProfile high_energy_profile(const PhgProfile& base);

PhgProfile profile_by_name(const std::string& name);

}  // namespace phgosc
