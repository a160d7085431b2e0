#pragma once

#include <string>

#include "lrw/bench.hpp"
#include "lrw/glasso.hpp"
#include "lrw/shrinkage.hpp"
#include "lrw/synthdgp.hpp"
#include "lrw/whittle.hpp"

namespace lrw {

// Matrix wire format: {"dim": p, "re": [p*p row-major], "im": [p*p row-major]}.
std::string matrix_to_json(const HermitianMatrix& m);
HermitianMatrix matrix_from_json(const std::string& text);

/// One half of the CSV pair (real or imaginary part), full precision.
std::string matrix_to_csv(const HermitianMatrix& m, bool imaginary_part);
HermitianMatrix matrix_from_csv(const std::string& re_text, const std::string& im_text);

std::string whittle_fit_to_json(const WhittleFit& fit);

std::string threshold_result_to_json(const ThresholdResult& res);
std::string cv_curve_to_csv(const ThresholdResult& res);

std::string glasso_path_to_json(const GlassoPath& path, double gamma);
std::string ebic_curve_to_csv(const GlassoPath& path);
/// Nonzero off-diagonal upper-triangle entries of the selected estimate:
/// r,s,re,im with 1-based indices.
std::string edge_list_to_csv(const GlassoPath& path);

std::string dgp_spec_to_json(const DgpSpec& spec);

std::string bench_report_to_json(const BenchReport& report);
/// Header plus one row for the (p, N) cell, table-layout metric columns.
std::string bench_report_to_csv(const BenchReport& report);

}  // namespace lrw
