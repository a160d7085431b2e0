#pragma once

#include <Eigen/Dense>
#include <string>

#include "lrw/errors.hpp"

namespace lrw {

/// N x p real observations, one column per component series. The library
/// never re-centers data; callers (the CLI does, by default) subtract column
/// means where the zero-mean convention is wanted.
class MultivariateSeries {
public:
    explicit MultivariateSeries(Eigen::MatrixXd values);

    Eigen::Index n() const { return values_.rows(); }
    int p() const { return static_cast<int>(values_.cols()); }
    const Eigen::MatrixXd& values() const { return values_; }

    /// Column-demeaned copy.
    MultivariateSeries demeaned() const;

private:
    Eigen::MatrixXd values_;
};

/// Parse a CSV of N rows x p numeric columns. Header row optional ('.'
/// decimal separator, comma delimiter). NaN/inf and malformed cells are
/// rejected with 1-based row/column coordinates.
MultivariateSeries read_series_csv(const std::string& path, bool demean);

/// Same parser on in-memory text (row/column coordinates refer to the text).
MultivariateSeries parse_series_csv(const std::string& text, bool demean);

/// Serialize with a header row x1..xp; values round-trip exactly.
std::string series_to_csv(const MultivariateSeries& x);

}  // namespace lrw
