#include "lrw/series.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace lrw {

MultivariateSeries::MultivariateSeries(Eigen::MatrixXd values) : values_(std::move(values)) {
    if (values_.rows() < 4)
        throw Error("series needs at least N = 4 observations, got " +
                    std::to_string(values_.rows()));
    if (values_.cols() < 1) throw Error("series needs at least one column");
    if (!values_.allFinite()) throw Error("series contains non-finite values");
}

MultivariateSeries MultivariateSeries::demeaned() const {
    Eigen::MatrixXd out = values_;
    out.rowwise() -= values_.colwise().mean();
    return MultivariateSeries(std::move(out));
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        // trim surrounding whitespace
        const auto begin = cell.find_first_not_of(" \t\r");
        const auto end = cell.find_last_not_of(" \t\r");
        cells.push_back(begin == std::string::npos ? "" : cell.substr(begin, end - begin + 1));
    }
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

bool parse_double(const std::string& cell, double& out) {
    const char* first = cell.data();
    const char* last = first + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

MultivariateSeries parse_series_csv(const std::string& text, bool demean) {
    std::vector<std::vector<double>> rows;
    std::size_t cols = 0;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::vector<std::string> cells = split_row(line);
        std::vector<double> row(cells.size());
        bool numeric = true;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (!parse_double(cells[c], row[c])) {
                numeric = false;
                if (!first_data_line)
                    throw ParseError("cannot parse \"" + cells[c] + "\" as a number at row " +
                                         std::to_string(lineno) + ", column " + std::to_string(c + 1),
                                     lineno, static_cast<int>(c + 1));
                break;
            }
            if (!std::isfinite(row[c]))
                throw ParseError("non-finite value at row " + std::to_string(lineno) +
                                     ", column " + std::to_string(c + 1),
                                 lineno, static_cast<int>(c + 1));
        }
        if (!numeric) {  // header row; only tolerated once, at the top
            first_data_line = false;
            cols = cells.size();
            continue;
        }
        if (rows.empty())
            cols = cols == 0 ? cells.size() : cols;
        if (cells.size() != cols)
            throw ParseError("row " + std::to_string(lineno) + " has " +
                                 std::to_string(cells.size()) + " cells, expected " +
                                 std::to_string(cols),
                             lineno, static_cast<int>(cells.size()));
        rows.push_back(std::move(row));
        first_data_line = false;
    }
    if (rows.empty()) throw ParseError("no data rows found");
    Eigen::MatrixXd values(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    MultivariateSeries series(std::move(values));
    return demean ? series.demeaned() : series;
}

MultivariateSeries read_series_csv(const std::string& path, bool demean) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_series_csv(buf.str(), demean);
}

std::string series_to_csv(const MultivariateSeries& x) {
    std::string out;
    out.reserve(static_cast<std::size_t>(x.n()) * x.p() * 20);
    for (int c = 0; c < x.p(); ++c) {
        out += (c ? ",x" : "x") + std::to_string(c + 1);
    }
    out += '\n';
    char buf[40];
    for (Eigen::Index r = 0; r < x.n(); ++r) {
        for (int c = 0; c < x.p(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", x.values()(r, c));
            if (c) out += ',';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace lrw
