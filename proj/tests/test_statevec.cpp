#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "ctprep/statevec.hpp"
#include "oracle.hpp"

using namespace ctprep;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void expect_amps(const StateVector& s, std::initializer_list<amplitude> want, double tol = 1e-12) {
  ASSERT_EQ(s.size(), want.size());
  std::size_t i = 0;
  for (const auto& w : want) {
    EXPECT_NEAR(s[i].real(), w.real(), tol) << "index " << i;
    EXPECT_NEAR(s[i].imag(), w.imag(), tol) << "index " << i;
    ++i;
  }
}

StateVector basis(int n, std::size_t index) {
  auto s = zero_state(n);
  s[0] = 0.0;
  s[index] = 1.0;
  return s;
}

}  // namespace

TEST(ZeroState, SmallRegisters) {
  expect_amps(zero_state(1), {1, 0});
  expect_amps(zero_state(2), {1, 0, 0, 0});
  const auto s3 = zero_state(3);
  ASSERT_EQ(s3.size(), 8u);
  EXPECT_EQ(s3[0], amplitude(1.0));
  for (std::size_t i = 1; i < 8; ++i) EXPECT_EQ(s3[i], amplitude(0.0));
}

TEST(ZeroState, RejectsOutOfRange) {
  EXPECT_THROW(zero_state(0), std::invalid_argument);
  EXPECT_THROW(zero_state(kMaxQubits + 1), std::invalid_argument);
  EXPECT_THROW(zero_state(5, 4), std::invalid_argument);
  EXPECT_NO_THROW(zero_state(4, 4));
}

TEST(ApplyGate, HadamardOnZero) {
  auto s = zero_state(1);
  apply_gate(s, Gate::h(0));
  expect_amps(s, {kInvSqrt2, kInvSqrt2});
}

TEST(ApplyGate, TOnOneAddsQuarterPiPhase) {
  auto s = basis(1, 1);
  apply_gate(s, Gate::t(0));
  expect_amps(s, {0, std::polar(1.0, std::numbers::pi / 4)});
}

TEST(ApplyGate, SOnOneMultipliesByI) {
  auto s = basis(1, 1);
  apply_gate(s, Gate::s(0));
  expect_amps(s, {0, amplitude(0, 1)});
}

TEST(ApplyGate, CnotFlipsTargetWhenControlSet) {
  // control = qubit 0 set, target = qubit 1 clear: index 0b01 -> 0b11
  auto s = basis(2, 0b01);
  apply_gate(s, Gate::cnot(0, 1));
  expect_amps(s, {0, 0, 0, 1});
  // control clear: unchanged
  auto u = basis(2, 0b10);
  apply_gate(u, Gate::cnot(0, 1));
  expect_amps(u, {0, 0, 1, 0});
}

TEST(ApplyGate, RejectsBadOperands) {
  auto s = zero_state(2);
  EXPECT_THROW(apply_gate(s, Gate::h(2)), std::invalid_argument);
  EXPECT_THROW(apply_gate(s, Gate::t(-1)), std::invalid_argument);
  EXPECT_THROW(apply_gate(s, Gate::cnot(0, 2)), std::invalid_argument);
  EXPECT_THROW(apply_gate(s, Gate::cnot(1, 1)), std::invalid_argument);
}

TEST(Simulate, Examples) {
  expect_amps(simulate(Circuit(2)), {1, 0, 0, 0});
  expect_amps(simulate(Circuit(1, {Gate::h(0), Gate::h(0)})), {1, 0});
  const Circuit bell(2, {Gate::h(0), Gate::cnot(0, 1)});
  const auto want = oracle::prepare(bell);
  const auto got = simulate(bell);
  for (Eigen::Index i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(got[i] - want(i)), 0.0, 1e-12);
  expect_amps(got, {kInvSqrt2, 0, 0, kInvSqrt2});
}

TEST(Simulate, MatchesDenseOracle) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto len = std::uniform_int_distribution<std::size_t>(0, 50)(rng);
      const auto c = random_circuit(n, len, rng);
      const auto got = simulate(c);
      const auto want = oracle::prepare(c);
      for (Eigen::Index i = 0; i < want.size(); ++i)
        ASSERT_LT(std::abs(got[i] - want(i)), 1e-10) << "n=" << n << " trial=" << trial;
    }
  }
}

TEST(Simulate, NormPreservedOverLongCircuits) {
  std::mt19937_64 rng(5);
  for (int n : {1, 3, 5}) {
    const auto c = random_circuit(n, 10000, rng);
    EXPECT_NEAR(simulate(c).norm_squared(), 1.0, 1e-9) << "n=" << n;
  }
}

TEST(Simulate, SelfInverseIdentities) {
  const int n = 3;
  for (std::size_t x = 0; x < 8; ++x) {
    const auto start = basis(n, x);
    auto check = [&](const Gate& g, int reps) {
      auto s = start;
      for (int r = 0; r < reps; ++r) apply_gate(s, g);
      for (std::size_t i = 0; i < s.size(); ++i) EXPECT_LT(std::abs(s[i] - start[i]), 1e-10) << to_string(g);
    };
    check(Gate::h(1), 2);
    check(Gate::cnot(2, 0), 2);
    check(Gate::s(0), 4);
    check(Gate::t(2), 8);
  }
}

TEST(Fidelity, Examples) {
  const auto zero = zero_state(1);
  const auto one = basis(1, 1);
  auto plus = zero_state(1);
  apply_gate(plus, Gate::h(0));
  EXPECT_DOUBLE_EQ(fidelity(zero, zero), 1.0);
  EXPECT_DOUBLE_EQ(fidelity(plus, plus), 1.0);
  EXPECT_EQ(fidelity(zero, one), 0.0);
  // |<+|0>|^2 = (1/sqrt2)^2
  EXPECT_NEAR(fidelity(plus, zero), 0.5, 1e-15);
}

TEST(Fidelity, DimensionMismatchThrows) {
  EXPECT_THROW(fidelity(zero_state(1), zero_state(2)), std::invalid_argument);
}

TEST(Fidelity, ExactlySymmetricAndInRange) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = simulate(random_circuit(3, 40, rng));
    const auto b = simulate(random_circuit(3, 40, rng));
    const double ab = fidelity(a, b);
    EXPECT_EQ(ab, fidelity(b, a));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_NEAR(ab, oracle::overlap(oracle::to_vec(a), oracle::to_vec(b)), 1e-12);
  }
}

TEST(Fidelity, GlobalPhaseInsensitive) {
  auto a = zero_state(2);
  apply_gate(a, Gate::h(0));
  auto b = a;
  for (auto& amp : b.amps()) amp *= std::polar(1.0, 0.3);
  EXPECT_NEAR(fidelity(a, b), 1.0, 1e-15);
}
