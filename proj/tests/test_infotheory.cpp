#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mubenc/dimension.hpp"
#include "mubenc/errors.hpp"
#include "mubenc/infotheory.hpp"

using namespace mubenc;

TEST_CASE("shannon entropy") {
  const std::vector<double> certain = {1.0, 0.0};
  const std::vector<double> coin = {0.5, 0.5};
  const std::vector<double> five(5, 0.2);
  CHECK(shannon_entropy(certain) == 0.0);
  CHECK(shannon_entropy(coin) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(shannon_entropy(five) == doctest::Approx(2.321928094887362).epsilon(1e-12));

  const std::vector<double> negative = {1.5, -0.5};
  const std::vector<double> short_mass = {0.5, 0.4};
  CHECK_THROWS_AS(shannon_entropy(negative), InvalidDistribution);
  CHECK_THROWS_AS(shannon_entropy(short_mass), InvalidDistribution);
}

TEST_CASE("initial uncertainty and capacity") {
  CHECK(initial_uncertainty(2) == 2.0);
  CHECK(initial_uncertainty(3) == doctest::Approx(2.3219).epsilon(1e-4));
  CHECK(initial_uncertainty(5) == doctest::Approx(2.8074).epsilon(1e-4));
  for (int d : {2, 3, 5, 7, 11, 13}) CHECK(capacity(d) == initial_uncertainty(d));
  CHECK_THROWS_AS(initial_uncertainty(4), InvalidDimension);
}

TEST_CASE("analytic posterior") {
  // (3/5) log2 3 + (2/5) log2 2
  CHECK(analytic_posterior(3, 1) == doctest::Approx(0.6 * std::log2(3.0) + 0.4).epsilon(1e-15));
  CHECK(analytic_posterior(3, 1) == doctest::Approx(1.3510).epsilon(1e-4));
  CHECK(analytic_posterior(3, 2) == doctest::Approx(0.4).epsilon(1e-15));
  for (int d : {2, 3, 5, 7, 11, 13}) CHECK(analytic_posterior(d, d) == 0.0);
  CHECK_THROWS_AS(analytic_posterior(3, 0), IndexOutOfRange);
  CHECK_THROWS_AS(analytic_posterior(3, 4), IndexOutOfRange);
}

TEST_CASE("posterior bounds and monotonicity") {
  for (int d = 2; d <= 31; ++d) {
    if (!is_prime(d)) continue;
    CAPTURE(d);
    CHECK(analytic_posterior(d, 1) > 0.0);
    for (int m = 1; m <= d; ++m) {
      const double h = analytic_posterior(d, m);
      CHECK(h >= 0.0);
      CHECK(h <= initial_uncertainty(d));
      if (m >= 2 && m < d) CHECK(analytic_posterior(d, m + 1) < h);
    }
  }
}

TEST_CASE("max info and efficiency") {
  CHECK(max_info(2) == 2.0);
  CHECK(max_info(3) == doctest::Approx(4.7549).epsilon(1e-4));
  CHECK(max_info(5) == doctest::Approx(11.6096).epsilon(1e-4));
  CHECK(efficiency(2) == 1.0);
  CHECK(efficiency(3) == doctest::Approx(0.4883).epsilon(1e-4));

  const auto rows = efficiency_table(31);
  CHECK(rows.size() == 11);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].ratio <= 1.0);
    CHECK((rows[i].ratio == 1.0) == (rows[i].d == 2));
    if (i > 0) CHECK(rows[i].ratio < rows[i - 1].ratio);
  }
}
