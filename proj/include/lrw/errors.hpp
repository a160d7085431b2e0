#pragma once

#include <stdexcept>
#include <string>

namespace lrw {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A matrix required to be positive definite was not.
struct NotPositiveDefinite : Error {
    using Error::Error;
};

/// A component series carries no spectral mass on the frequencies in use.
struct DegenerateSeries : Error {
    int component;
    explicit DegenerateSeries(int r)
        : Error("component " + std::to_string(r + 1) +
                " has zero local periodogram mass (degenerate series)"),
          component(r) {}
};

/// Requested number of Fourier frequencies m outside [1, floor(N/2)-1].
struct InvalidFrequencyCount : Error {
    using Error::Error;
};

/// Threshold grid could not be built (e.g. from an all-zero matrix).
struct DegenerateGrid : Error {
    using Error::Error;
};

/// A matrix violated the Hermitian-symmetry gate on construction.
struct NonHermitian : Error {
    using Error::Error;
};

/// Dimension not supported by a DGP preset.
struct InvalidDimension : Error {
    using Error::Error;
};

/// CSV / JSON input could not be parsed; coordinates are 1-based.
struct ParseError : Error {
    long row = 0;
    int column = 0;
    ParseError(const std::string& what, long r, int c) : Error(what), row(r), column(c) {}
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Filesystem problem (missing path, unreadable file, failed write).
struct IoError : Error {
    using Error::Error;
};

}  // namespace lrw
