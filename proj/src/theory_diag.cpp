#include "lrw/theory_diag.hpp"

#include <cmath>

#include "lrw/errors.hpp"

namespace lrw::diag {

double v1(std::int64_t m) {
    if (m < 2) throw Error("v1 needs m >= 2");
    const double md = static_cast<double>(m);
    return (1.0 - 1.0 / (md * md)) / 18.0;
}

LWeights l_weights(std::int64_t m, double d0, double delta, double delta1) {
    if (m < 2) throw Error("l_weights needs m >= 2");
    if (!(delta > 0.0 && delta < 0.5)) throw Error("l_weights needs 0 < Delta < 1/2");
    LWeights out;
    double log_ell = 0.0;
    for (std::int64_t j = 1; j <= m; ++j) log_ell += std::log(static_cast<double>(j));
    log_ell /= static_cast<double>(m);
    out.ell = std::exp(log_ell);
    out.l.resize(m);
    double acc = 0.0;
    for (std::int64_t j = 1; j <= m; ++j) {
        const double ratio = std::log(static_cast<double>(j)) - log_ell;
        const double expo = static_cast<double>(j) <= out.ell ? 2.0 * (-0.5 + delta)
                                                              : 2.0 * (delta1 - d0);
        const double lj = std::exp(expo * ratio);
        out.l[j - 1] = lj;
        acc += lj - 1.0;
    }
    out.v2 = acc / static_cast<double>(m);
    return out;
}

ThetaSplit theta_split(double d0, double delta1, double delta2, double delta) {
    if (!(delta1 > -0.5 && delta1 < delta2 && delta2 < 0.5))
        throw Error("need -1/2 < delta1 < delta2 < 1/2");
    if (!(delta > 0.0 && delta < delta2)) throw Error("need 0 < Delta < delta2");
    ThetaSplit out;
    if (d0 >= delta1 + 0.5) {
        const double cut = d0 - 0.5 + delta;
        out.theta1 = {cut, delta2, false};
        out.theta2 = {delta1, cut, false};
    } else {
        out.theta1 = {delta1, delta2, false};
        out.theta2 = {0.0, 0.0, true};
    }
    return out;
}

}  // namespace lrw::diag
