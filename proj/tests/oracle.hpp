#pragma once

// Test-only reference implementations. None of these call into the library's
// simulation path: gate matrices are built from Kronecker products of the
// textbook 2x2 blocks and applied as dense matrix-vector products.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <bit>
#include <numbers>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "ctprep/circuit.hpp"
#include "ctprep/statevec.hpp"

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Mat h2() {
  Mat m(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  m << r, r, r, -r;
  return m;
}
inline Mat s2() {
  Mat m(2, 2);
  m << 1, 0, 0, cd(0, 1);
  return m;
}
inline Mat t2() {
  Mat m(2, 2);
  m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4);
  return m;
}
inline Mat x2() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

// Qubit 0 is the least significant index bit, so it is the rightmost factor.
inline Mat embed(int n, const std::vector<std::pair<int, Mat>>& factors) {
  Mat out = Mat::Identity(1, 1);
  for (int q = n - 1; q >= 0; --q) {
    Mat f = Mat::Identity(2, 2);
    for (const auto& [k, m] : factors)
      if (k == q) f = m;
    out = kron(out, f);
  }
  return out;
}

inline Mat gate_matrix(const ctprep::Gate& g, int n) {
  using ctprep::GateKind;
  switch (g.kind) {
    case GateKind::H: return embed(n, {{g.qubits[0], h2()}});
    case GateKind::S: return embed(n, {{g.qubits[0], s2()}});
    case GateKind::T: return embed(n, {{g.qubits[0], t2()}});
    case GateKind::CNOT: {
      Mat p0(2, 2), p1(2, 2);
      p0 << 1, 0, 0, 0;
      p1 << 0, 0, 0, 1;
      return embed(n, {{g.qubits[0], p0}}) + embed(n, {{g.qubits[0], p1}, {g.qubits[1], x2()}});
    }
  }
  return Mat();
}

inline Mat unitary(const ctprep::Circuit& c) {
  const Eigen::Index dim = Eigen::Index{1} << c.qubits();
  Mat u = Mat::Identity(dim, dim);
  for (const auto& g : c.gates()) u = gate_matrix(g, c.qubits()) * u;
  return u;
}

inline Vec prepare(const ctprep::Circuit& c) {
  const Eigen::Index dim = Eigen::Index{1} << c.qubits();
  Vec zero = Vec::Zero(dim);
  zero(0) = 1.0;
  return unitary(c) * zero;
}

inline double overlap(const Vec& a, const Vec& b) { return std::norm(a.dot(b)); }

inline Vec to_vec(const ctprep::StateVector& s) {
  Vec v(static_cast<Eigen::Index>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

// Minimal QASM reader independent of ctprep::parse_qasm.
inline ctprep::Circuit load_gate_list(const std::string& text) {
  std::regex qreg(R"(qreg\s+q\[(\d+)\]\s*;)");
  std::regex one(R"(^\s*(h|s|t)\s+q\[(\d+)\]\s*;)");
  std::regex two(R"(^\s*cx\s+q\[(\d+)\]\s*,\s*q\[(\d+)\]\s*;)");
  std::smatch m;
  ctprep::Circuit c;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (std::regex_search(line, m, qreg)) {
      c = ctprep::Circuit(std::stoi(m[1]));
    } else if (std::regex_search(line, m, one)) {
      const int q = std::stoi(m[2]);
      c.push_back(m[1] == "h" ? ctprep::Gate::h(q) : m[1] == "s" ? ctprep::Gate::s(q) : ctprep::Gate::t(q));
    } else if (std::regex_search(line, m, two)) {
      c.push_back(ctprep::Gate::cnot(std::stoi(m[1]), std::stoi(m[2])));
    }
  }
  return c;
}

// Direct formula evaluation of the target families, in long double.
inline std::vector<cd> ghz(int n) {
  std::vector<cd> v(std::size_t{1} << n);
  v.front() += 1.0L / std::sqrt(2.0L);
  v.back() += 1.0L / std::sqrt(2.0L);
  return v;
}

inline std::vector<cd> w(int n) {
  std::vector<cd> v(std::size_t{1} << n);
  for (std::size_t x = 0; x < v.size(); ++x)
    if (std::popcount(x) == 1) v[x] = static_cast<double>(1.0L / std::sqrt(static_cast<long double>(n)));
  return v;
}

inline std::vector<cd> qft_ones(int n) {
  const long double N = std::ldexp(1.0L, n);
  const long double phi = N - 1;
  std::vector<cd> v(std::size_t{1} << n);
  for (std::size_t x = 0; x < v.size(); ++x) {
    const long double ang = 2.0L * std::numbers::pi_v<long double> * phi * static_cast<long double>(x) / N;
    v[x] = cd(static_cast<double>(std::cos(ang) / std::sqrt(N)), static_cast<double>(std::sin(ang) / std::sqrt(N)));
  }
  return v;
}

inline std::vector<cd> poisson(int n) {
  const long double lambda = std::ldexp(1.0L, n - 1);
  std::vector<long double> pmf(std::size_t{1} << n);
  long double fact = 1.0L;
  long double norm = 0.0L;
  for (std::size_t x = 0; x < pmf.size(); ++x) {
    if (x > 0) fact *= static_cast<long double>(x);
    pmf[x] = std::pow(lambda, static_cast<long double>(x)) * std::exp(-lambda) / fact;
    norm += pmf[x] * pmf[x];
  }
  std::vector<cd> v(pmf.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = static_cast<double>(pmf[x] / std::sqrt(norm));
  return v;
}

}  // namespace oracle
