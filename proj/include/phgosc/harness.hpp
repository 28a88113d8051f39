#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "phgosc/phg_series.hpp"

namespace phgosc {

enum class Scenario { fig_numeric, gaussian_phase, bound_state, fourier_table };
std::string to_string(Scenario s);
Scenario parse_scenario(const std::string& s);

struct Grid {
    enum class Kind { linear, log } kind = Kind::linear;
    double lo = 1;
    double hi = 400;
    int points = 2000;
    std::vector<double> values() const;
};

// r as a function of t: c t, c sqrt(t), or the constant c.
struct Ray {
    enum class Kind { linear, sqrt, fixed } kind = Kind::linear;
    double c = 2;
    double r_at(double t) const;
    static Ray parse(const std::string& s);  // "2*t", "0.5*sqrt(t)", "3"
};

struct ScanSpec {
    Scenario scenario = Scenario::fig_numeric;
    Grid t_grid;
    Ray ray;
    std::string output;
    void validate() const;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    // Rows whose oracle did not meet its tolerance; values are best effort.
    std::vector<std::size_t> flagged;
};

// Columns t, re, im, t2_im, envelope_estimate, err of I_+ - I_- for the example
// profile along the ray. Rows run in parallel on `threads` workers.
Table fig_numeric_scan(const ScanSpec& spec, unsigned threads = 0);

struct FigAnalysis {
    std::vector<double> avg_t, avg;          // 2 pi running mean of t^2 Im
    std::vector<double> peak_t, peak_height;  // maxima of the oscillatory residual
    double mean_spacing = 0;
    double envelope_slope = 0;
};
// Needs a uniform grid fine enough to resolve the 2 pi oscillation.
FigAnalysis analyze_fig_numeric(const Table& fig);

// -i int e^{-2 i l} l / (1 + l^2) dl by quadrature along Im l = -1/2.
std::complex<double> limit_constant();

std::complex<double> gaussian_wavepacket(double t, double x);
// (2 s rho) theta with theta the continuous phase of G at x = 1/rho, t = s x.
double gaussian_phase_chart(double s, double rho);

std::complex<double> bound_state_term(double E, double t, double r, const std::function<double(double)>& profile);

// Rows for the remaining scenarios. gaussian_phase reads the grid as rho values
// with s = ray.c; bound_state uses E = 1 and profile exp(-r^2).
Table gaussian_phase_scan(const ScanSpec& spec);
Table bound_state_scan(const ScanSpec& spec);
Table fourier_table_scan(const ScanSpec& spec);
Table run_scan(const ScanSpec& spec, unsigned threads = 0);

void emit_csv(const Table& table, const std::string& path);
void write_csv(std::ostream& os, const Table& table);

}  // namespace phgosc
