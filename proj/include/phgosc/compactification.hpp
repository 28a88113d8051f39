#pragma once

#include <string>

namespace phgosc {

enum class Face { kf, parF, dilF, nf, Sigma, interior };

std::string to_string(Face f);
Face parse_face(const std::string& s);

struct ChartPoint {
    double t = 0;
    double r = 1;
    double rho = 1;
    double tau = 0;  // t / r^2
    double s = 0;    // t / r
    double bdf_kf = 0;
    double bdf_parF = 0;
    double bdf_dilF = 0;
    double bdf_nf = 0;
    double bdf_sigma = 0;
};

ChartPoint chart(double t, double r);
Face classify(const ChartPoint& p, double threshold);

// C-infinity bump exp(1 - 1/(1 - x^2)) on |x| < 1, zero outside.
double bump(double x);
// Smooth step: 1 for u <= 0, 0 for u >= 1, built from two bumps.
double smooth_step(double u);

struct PartitionParams {
    double sigma0 = 0.5;
    double sigma1 = 1.0;
    double lambda0 = 4.0;
};

struct Weights {
    double low = 0, mid = 0, high = 0;
};

Weights partition_weights(double sigma, double r, const PartitionParams& p = {});

// Stationary window: 1 on |x| <= 1/4, supported in (-1/2, 1/2).
double window_psi(double x);
// Time cutoff: 1 for t <= 1, 0 for t >= 2.
double time_cutoff_chi(double t);

}  // namespace phgosc
