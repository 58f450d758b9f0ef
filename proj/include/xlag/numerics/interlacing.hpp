#pragma once

#include "xlag/exceptional/family.hpp"

#include <complex>
#include <string>
#include <vector>

namespace xlag {

struct RootReport {
    int m = 0, k = 0;
    double a = 0;
    std::vector<double> positive_roots;  // increasing
    std::vector<double> negative_roots;  // increasing
    std::vector<std::complex<double>> complex_roots;
    // Roots of L_{k-1}^{a+1}(x) and of L_m^{-a-1}(-x), increasing.
    std::vector<double> reference_positive;
    std::vector<double> reference_negative;
    // One flag per interval (0,x1), (x1,x2), ..., (x_{k-1},inf), and per
    // interval (-inf,z_m), (z_m,z_{m-1}), ..., (z_2,z_1): exactly one root inside.
    std::vector<bool> positive_intervals;
    std::vector<bool> negative_intervals;
    bool counts_ok = false;  // k positive, m negative, nothing else
    bool simple = false;     // neighbouring roots separated by more than 1e2 * tol
    bool pass = false;
};

// Locates the roots of the Type III polynomial of degree m+k at -1 < a < 0
// and checks them against the two reference families.
// Throws DomainError or ConvergenceFailure.
RootReport interlacing_check(int m, int k, double a, double tol = 1e-12);

struct AsymptoticsRow {
    int k = 0;
    // Type III: max distance of the negative roots to the roots of
    // L_m^{-a-1}(-x), and the smallest positive root.
    double exceptional_distance = 0;
    double first_positive_root = 0;
    // Type I: |k x_{k,i} - j_{a,i}^2/4| for i = 1..3, with x_{k,i} the i-th
    // positive root of the degree m+k polynomial.
    std::vector<double> scaled_root_gap;
    std::vector<double> scaled_root_relative;
};

struct AsymptoticsTable {
    Family family = Family::TypeIII;
    int m = 0;
    double a = 0;
    std::vector<AsymptoticsRow> rows;
    // Column name -> strictly decreasing over the rows.
    std::vector<std::pair<std::string, bool>> trends;
    bool all_decreasing = false;
};

// Type III and Type I only; ks must be increasing.
AsymptoticsTable asymptotics_probe(Family f, int m, double a, const std::vector<int>& ks);

} // namespace xlag
