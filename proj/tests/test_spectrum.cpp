#include <doctest.h>

#include <cmath>

#include "fnls/spectrum.hpp"

using namespace fnls;

TEST_CASE("sphere eigenvalues are j(j+d-1)") {
    CHECK(eigenvalue(sphere(2), 0) == 0.0);
    CHECK(eigenvalue(sphere(2), 1) == 2.0);
    CHECK(eigenvalue(sphere(2), 5) == 30.0);
    CHECK(eigenvalue(sphere(3), 2) == 8.0);
}

TEST_CASE("torus d=1 eigenvalues are j^2") {
    CHECK(eigenvalue(torus(1), 0) == 0.0);
    CHECK(eigenvalue(torus(1), 3) == 9.0);
    CHECK(eigenvalue(torus(1), 7) == 49.0);
}

TEST_CASE("torus d>=2 levels enumerate distinct |k|^2 with lattice counts") {
    // sums of two squares: 0, 1, 2, 4, 5, 8, 9, 10, ... (3, 6, 7 missing)
    const auto levels = torus_levels(2, 8);
    REQUIRE(levels.size() == 8);
    CHECK(levels[0].lambda == 0);
    CHECK(levels[1].lambda == 1);
    CHECK(levels[2].lambda == 2);
    CHECK(levels[3].lambda == 4);
    CHECK(levels[4].lambda == 5);
    CHECK(levels[5].lambda == 8);
    CHECK(levels[6].lambda == 9);
    CHECK(levels[7].lambda == 10);
    CHECK(levels[0].count == 1);  // origin
    CHECK(levels[1].count == 4);  // (±1,0),(0,±1)
    CHECK(levels[2].count == 4);  // (±1,±1)
    CHECK(levels[4].count == 8);  // 5 = 1+4 in 8 signed/ordered ways
    CHECK(eigenvalue(torus(2), 3) == 4.0);
    CHECK(multiplicity(torus(2), 4) == 8);
}

TEST_CASE("frequency is lambda^s with a hard zero mode") {
    CHECK(frequency(sphere(2), 1, 1.0) == 2.0);
    CHECK(frequency(torus(1), 5, 1.0) == 25.0);
    CHECK(frequency(sphere(3), 2, 0.75) == doctest::Approx(std::pow(8.0, 0.75)).epsilon(1e-14));
    CHECK(frequency(sphere(2), 0, 0.7) == 0.0);
    CHECK_THROWS_AS(frequency(sphere(2), 1, 0.0), std::domain_error);
    CHECK_THROWS_AS(frequency(sphere(2), 1, -1.0), std::domain_error);
}

TEST_CASE("frequency equals exp(s ln lambda) to machine precision") {
    for (const Domain& dom : {sphere(2), sphere(3), torus(1)}) {
        for (int j = 1; j <= 12; ++j) {
            for (double s : {0.6, 1.0, 1.7}) {
                const double direct = frequency(dom, j, s);
                const double via_exp = std::exp(s * std::log(eigenvalue(dom, j)));
                CHECK(std::abs(direct - via_exp) <= 1e-13 * via_exp);
            }
        }
    }
}

TEST_CASE("frequencies increase strictly in the level") {
    for (const Domain& dom : {sphere(2), sphere(4), torus(1), torus(3)}) {
        for (double s : {0.6, 1.0, 1.7}) {
            double prev = frequency(dom, 1, s);
            CHECK(prev > 0.0);
            for (int j = 2; j <= 10; ++j) {
                const double cur = frequency(dom, j, s);
                CHECK(cur > prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("sphere frequencies stay >= 1 for every positive s") {
    for (int d : {2, 3, 5}) {
        for (int j = 1; j <= 10; ++j) {
            for (double s : {0.1, 0.6, 1.0, 1.7}) {
                CHECK(frequency(sphere(d), j, s) >= 1.0);
            }
        }
    }
}

TEST_CASE("frequency_derivative matches its closed form on hand cases") {
    CHECK(frequency_derivative(sphere(2), 1, 1.0, 0) == 2.0);
    CHECK(frequency_derivative(sphere(2), 1, 1.0, 1) ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
    CHECK(frequency_derivative(torus(1), 2, 0.6, 2) ==
          doctest::Approx(std::pow(std::log(4.0), 2) * std::pow(4.0, 0.6)).epsilon(1e-14));
    CHECK_THROWS_AS(frequency_derivative(sphere(2), 0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("derivative consistency: analytic k-th vs central differences of the (k-1)-th") {
    // first-order central differences of the analytic (k-1)-th derivative keep
    // the finite-difference roundoff at the 1e-10 level for step 1e-6
    const double h = 1e-6;
    for (const Domain& dom : {sphere(2), sphere(3), torus(1)}) {
        for (int j = 1; j <= 10; ++j) {
            for (int k = 1; k <= 3; ++k) {
                for (double s : {0.6, 1.0, 1.7}) {
                    const double up = frequency_derivative(dom, j, s + h, k - 1);
                    const double dn = frequency_derivative(dom, j, s - h, k - 1);
                    const double fd = (up - dn) / (2.0 * h);
                    const double analytic = frequency_derivative(dom, j, s, k);
                    CHECK(std::abs(analytic - fd) <= 1e-6 * std::max(1.0, std::abs(analytic)));
                }
            }
        }
    }
}

TEST_CASE("multiplicities: spheres and the two torus families") {
    CHECK(multiplicity(sphere(2), 0) == 1);
    CHECK(multiplicity(sphere(2), 3) == 7);   // 2j+1
    CHECK(multiplicity(sphere(3), 2) == 9);
    CHECK(multiplicity(sphere(1), 0) == 1);   // circle: cos/sin pairs above j=0
    CHECK(multiplicity(sphere(1), 4) == 2);
    CHECK(multiplicity(torus(1), 0) == 1);
    CHECK(multiplicity(torus(1), 4) == 2);    // modes ±4
}

TEST_CASE("sphere multiplicity agrees with (2j+d-1)(j+d-2)!/(j!(d-1)!)") {
    const auto reference = [](int j, int d) {
        double num = 2.0 * j + d - 1.0;
        // (j+d-2)! / (j! (d-1)!) accumulated as a product of ratios
        double acc = 1.0;
        for (int i = 1; i <= d - 2; ++i) acc *= static_cast<double>(j + i) / i;
        if (d >= 2) acc /= (d - 1);
        else acc = 1.0 / j;  // d = 1: (j-1)!/j! = 1/j
        return num * acc;
    };
    for (int d : {1, 2, 3, 4, 6}) {
        for (int j = 1; j <= 8; ++j) {
            CHECK(static_cast<double>(multiplicity(sphere(d), j)) ==
                  doctest::Approx(reference(j, d)).epsilon(1e-12));
        }
    }
}

TEST_CASE("sobolev weight 1 + lambda^r") {
    CHECK(sobolev_weight(0.0, 4.0) == 1.0);
    CHECK(sobolev_weight(4.0, 2.0) == 17.0);
    CHECK(sobolev_weight(2.0, 2.5) ==
          doctest::Approx(1.0 + std::pow(2.0, 2.5)).epsilon(1e-14));
}

TEST_CASE("frequency table: invariants and cutoff errors") {
    const FrequencyTable table(torus(1), 0.75, 10);
    CHECK(table.omega(0) == 0.0);
    CHECK(table.max_level() == 10);
    for (int j = 2; j <= 10; ++j) CHECK(table.omega(j) > table.omega(j - 1));
    for (int j = 1; j <= 10; ++j)
        CHECK(table.omega(j) == doctest::Approx(std::pow(table.lambda(j), 0.75)));
    CHECK_THROWS_AS(table.omega(11), std::out_of_range);

    const FrequencyTable t2(torus(2), 1.0, 5);
    CHECK(t2.lambda(3) == 4.0);
    CHECK(t2.lambda(5) == 8.0);
}
