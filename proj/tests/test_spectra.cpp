#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "eckart/expansion.hpp"
#include "eckart/spectra.hpp"

using namespace eckart;

TEST(Spectrum, AlphaAndEnergies) {
  EXPECT_EQ(alpha_l(0, Rational(1)), Rational(4));
  EXPECT_EQ(alpha_l(1, Rational(1)), Rational(4, 3));
  EXPECT_EQ(alpha_l(2, Rational(0)), Rational(0));
  EXPECT_EQ(eckart_energy(0, Rational(1)), Rational(-4));
  EXPECT_EQ(eckart_energy(1, Rational(1)), Rational(-22, 9));
  EXPECT_EQ(eckart_energy(2, Rational(1)), Rational(-154, 25));
  for (int l = 0; l <= 2; ++l) EXPECT_EQ(eckart_energy(l, Rational(0)), Rational(-l * (l + 1)));
}

TEST(Spectrum, Invariants) {
  for (const Rational b : {Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
    EXPECT_EQ(eckart_energy(0, b), -4 * b * b);
    for (int l = 0; l <= 8; ++l) {
      const Rational h(2 * l + 1, 2);
      const Rational a = alpha_l(l, b);
      EXPECT_EQ(eckart_energy(l, b), Rational(-l * (l + 1)) - a * a / 4);
      EXPECT_EQ(eckart_energy(l, b), Rational(-l * (l + 1)) - b * b / (h * h));
      EXPECT_EQ(rosen_morse_energy(l, b) - eckart_energy(l, b), Rational(2 * l * (l + 1)));
      EXPECT_EQ(evaluate_at(eckart_eigenvalue(l), b), Gaussian(-eckart_energy(l, b)));
      EXPECT_EQ(evaluate_at(rosen_morse_eigenvalue(l), b), Gaussian(Rational(l * (l + 1)) - a * a / 4));
      const JacobiParams p = jacobi_params(l, b);
      EXPECT_EQ(p.gamma, b / h - h);
      EXPECT_EQ(p.delta, -b / h - h);
    }
  }
}

TEST(Spectrum, QuantumNumbersAndDegeneracy) {
  EXPECT_EQ(quantum_numbers(0, 3), 3);
  EXPECT_EQ(quantum_numbers(2, 0), 2);
  EXPECT_EQ(quantum_numbers(0, 0), 0);
  EXPECT_THROW(quantum_numbers(-1, 0), std::invalid_argument);
  for (int l = 0; l <= 8; ++l) {
    EXPECT_EQ(degeneracy(l), 2 * l + 1);
    EXPECT_EQ(static_cast<int>(eckart_multiplet(l, Rational(1)).size()), degeneracy(l));
  }
}

TEST(Spectrum, TableAndSerialization) {
  const auto t = spectrum_table(2, Rational(1));
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].epsilon, Rational(-4));
  EXPECT_EQ(t[0].alpha_l, Rational(4));
  EXPECT_EQ(t[0].degeneracy, 1);
  EXPECT_EQ(t[2].degeneracy, 5);

  const std::string csv = spectrum_to_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "l,b,alpha_l,epsilon,epsilon_rm,gamma,delta,degeneracy");
  EXPECT_NE(csv.find("\n1,1,4/3,-22/9,14/9,-5/6,-13/6,3\n"), std::string::npos);

  const auto j = nlohmann::json::parse(spectrum_to_json(t));
  ASSERT_EQ(j["entries"].size(), 3u);
  EXPECT_EQ(j["entries"][1]["epsilon"], "-22/9");
  EXPECT_EQ(j["entries"][2]["degeneracy"], 5);
  EXPECT_TRUE(j.contains("sign_convention"));
  EXPECT_TRUE(j.contains("units"));
  EXPECT_THROW(spectrum_table(-1, Rational(1)), std::invalid_argument);
}
