#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "randsat/analysis.hpp"

namespace randsat {

namespace {

const double kLog2ThreeHalves = std::log2(1.5);

// log2(2^a + 2^b)
double log2_sum(double a, double b) {
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

} // namespace

double ppz_bound_log2(std::uint32_t n) {
  if (n == 0)
    throw std::invalid_argument("ppz_bound needs n >= 1");
  return -2.0 * static_cast<double>(n) / 3.0;
}

double ppz_bound(std::uint32_t n) { return std::exp2(ppz_bound_log2(n)); }

double del_bound_log2(double c) {
  if (!(c >= 0.0))
    throw std::invalid_argument("del_bound needs c >= 0");
  return -c * kLog2ThreeHalves;
}

double del_bound(double c) {
  if (!(c >= 0.0))
    throw std::invalid_argument("del_bound needs c >= 0");
  return std::pow(2.0 / 3.0, c);
}

double delppz_bound_log2(std::uint32_t n, double s, double t_av) {
  if (n == 0 || !(s >= 1.0) || !(t_av >= 1.0))
    throw std::invalid_argument("delppz_bound needs n >= 1, s >= 1, t_av >= 1");
  const double nd = static_cast<double>(n);
  const double log_s = std::log2(s);
  const double del_term = log_s - nd * t_av * kLog2ThreeHalves;
  const double ppz_term = (log_s - nd) * 2.0 / 3.0;
  return std::min(0.0, log2_sum(del_term, ppz_term));
}

double delppz_bound(std::uint32_t n, double s, double t_av) {
  if (n == 0 || !(s >= 1.0) || !(t_av >= 1.0))
    throw std::invalid_argument("delppz_bound needs n >= 1, s >= 1, t_av >= 1");
  const double nd = static_cast<double>(n);
  const double del_term = s * std::exp2(-nd * t_av * kLog2ThreeHalves);
  const double ppz_term = std::pow(std::exp2(-nd) * s, 2.0 / 3.0);
  return std::min(1.0, del_term + ppz_term);
}

double crossover_t_av() { return 2.0 / (3.0 * kLog2ThreeHalves); }

} // namespace randsat
