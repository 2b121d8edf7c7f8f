#pragma once

// Target statevectors: GHZ, W, QFT of |1...1>, Poisson and Haar-random.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctprep/statevec.hpp"

namespace ctprep {

namespace detail {

inline void require_qubits(int n, const char* who) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument(std::string(who) + ": qubit count " + std::to_string(n) +
                                " out of range");
}

inline std::vector<amplitude> empty_amps(int n) { return std::vector<amplitude>(std::size_t{1} << n); }

inline void normalize(std::vector<amplitude>& amps) {
  double acc = 0.0;
  for (const auto& a : amps) acc += std::norm(a);
  const double inv = 1.0 / std::sqrt(acc);
  for (auto& a : amps) a *= inv;
}

}  // namespace detail

/// (|0...0> + |1...1>) / sqrt(2)
inline StateVector ghz(int n) {
  detail::require_qubits(n, "ghz");
  auto amps = detail::empty_amps(n);
  amps.front() = std::numbers::sqrt2 / 2;
  amps.back() = std::numbers::sqrt2 / 2;
  return StateVector(n, std::move(amps));
}

/// Uniform superposition of the n one-hot basis states.
inline StateVector w_state(int n) {
  detail::require_qubits(n, "w_state");
  auto amps = detail::empty_amps(n);
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) amps[std::size_t{1} << k] = a;
  return StateVector(n, std::move(amps));
}

/// Fourier transform of |1...1>: amps[x] = exp(2 pi i (N-1) x / N) / sqrt(N), N = 2^n.
inline StateVector qft_all_ones(int n) {
  detail::require_qubits(n, "qft_all_ones");
  auto amps = detail::empty_amps(n);
  const std::size_t dim = amps.size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    // (N-1) x = -x  (mod N); reduce before converting to an angle
    const std::size_t k = (dim - x % dim) % dim;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(dim);
    amps[x] = scale * amplitude{std::cos(theta), std::sin(theta)};
  }
  return StateVector(n, std::move(amps));
}

/// Amplitudes proportional to the Poisson pmf with mean 2^(n-1), L2-normalized.
inline StateVector poisson_state(int n) {
  detail::require_qubits(n, "poisson_state");
  auto amps = detail::empty_amps(n);
  const double lambda = std::ldexp(1.0, n - 1);
  const double log_lambda = std::log(lambda);
  std::vector<double> log_w(amps.size());
  double peak = -HUGE_VAL;
  for (std::size_t x = 0; x < amps.size(); ++x) {
    const double xd = static_cast<double>(x);
    log_w[x] = xd * log_lambda - lambda - std::lgamma(xd + 1.0);
    peak = std::max(peak, log_w[x]);
  }
  // shift by the peak so the largest weight is exactly 1 before normalizing
  for (std::size_t x = 0; x < amps.size(); ++x) amps[x] = std::exp(log_w[x] - peak);
  detail::normalize(amps);
  return StateVector(n, std::move(amps));
}

/// Haar-distributed pure state: i.i.d. standard complex Gaussians, normalized.
inline StateVector haar_random(int n, std::uint64_t seed) {
  detail::require_qubits(n, "haar_random");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto amps = detail::empty_amps(n);
  for (auto& a : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = {re, im};
  }
  detail::normalize(amps);
  return StateVector(n, std::move(amps));
}

/// Reads `index real imag` lines (one per nonzero amplitude; '#' starts a
/// comment). The result must have unit norm within `tolerance`.
inline StateVector read_target(std::istream& in, int n, double tolerance = 1e-6) {
  detail::require_qubits(n, "read_target");
  auto amps = detail::empty_amps(n);
  std::vector<bool> seen(amps.size(), false);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long index = 0;
    double re = 0.0;
    double im = 0.0;
    if (!(ls >> index)) continue;
    if (!(ls >> re >> im))
      throw std::runtime_error("target line " + std::to_string(lineno) + ": expected 'index real imag'");
    std::string extra;
    if (ls >> extra)
      throw std::runtime_error("target line " + std::to_string(lineno) + ": trailing '" + extra + "'");
    if (index < 0 || static_cast<unsigned long long>(index) >= amps.size())
      throw std::runtime_error("target line " + std::to_string(lineno) + ": index " +
                               std::to_string(index) + " outside a " + std::to_string(n) +
                               "-qubit register");
    if (seen[index])
      throw std::runtime_error("target line " + std::to_string(lineno) + ": duplicate index " +
                               std::to_string(index));
    seen[index] = true;
    amps[index] = {re, im};
  }
  double norm = 0.0;
  for (const auto& a : amps) norm += std::norm(a);
  if (std::abs(norm - 1.0) > tolerance)
    throw std::runtime_error("target state has squared norm " + std::to_string(norm) +
                             ", expected 1 within " + std::to_string(tolerance));
  return StateVector(n, std::move(amps));
}

inline StateVector load_target_file(const std::string& path, int n, double tolerance = 1e-6) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open target file '" + path + "'");
  try {
    return read_target(in, n, tolerance);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace ctprep
