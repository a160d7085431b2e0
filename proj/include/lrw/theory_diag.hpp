#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace lrw::diag {

/// V1(m) = (1/3) m^{-4} sum_{i,j=1}^m (i-j)^2 = (1/18)(1 - 1/m^2).
double v1(std::int64_t m);

struct LWeights {
    double ell = 0.0;          // exp((1/m) sum log j) = (m!)^{1/m}
    Eigen::VectorXd l;         // l_j, j = 1..m
    double v2 = 0.0;           // (1/m) sum (l_j - 1)
};

/// Piecewise weights l_j = (j/ell)^{2(-1/2+Delta)} for j <= ell and
/// (j/ell)^{2(delta1-d0)} for j > ell, plus their average excess V2(m).
LWeights l_weights(std::int64_t m, double d0, double delta, double delta1);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool empty = true;
};

struct ThetaSplit {
    Interval theta1;
    Interval theta2;  // theta2.hi is exclusive when nonempty
};

/// Admissible-set split around d0 - 1/2: Theta1 = [d0-1/2+Delta, delta2] and
/// Theta2 = [delta1, d0-1/2+Delta) when d0 >= delta1 + 1/2, otherwise
/// Theta1 = [delta1, delta2] and Theta2 empty.
ThetaSplit theta_split(double d0, double delta1, double delta2, double delta);

}  // namespace lrw::diag
