#include "lrw/serialize.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace lrw {

using nlohmann::json;

namespace {

json matrix_json(const HermitianMatrix& m) {
    const int p = m.dim();
    std::vector<double> re, im;
    re.reserve(static_cast<std::size_t>(p) * p);
    im.reserve(static_cast<std::size_t>(p) * p);
    for (int r = 0; r < p; ++r)
        for (int s = 0; s < p; ++s) {
            re.push_back(m(r, s).real());
            im.push_back(m(r, s).imag());
        }
    return json{{"dim", p}, {"re", re}, {"im", im}};
}

HermitianMatrix matrix_from(const json& j) {
    const int p = j.at("dim").get<int>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != static_cast<std::size_t>(p) * p || im.size() != re.size())
        throw ParseError("matrix entry arrays must hold dim^2 values");
    Eigen::MatrixXcd m(p, p);
    for (int r = 0; r < p; ++r)
        for (int s = 0; s < p; ++s) {
            const std::size_t k = static_cast<std::size_t>(r) * p + s;
            m(r, s) = Complex(re[k], im[k]);
        }
    return HermitianMatrix(m);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void append_full(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

json stats_json(const MetricStats& s) { return json{{"mean", s.mean}, {"se", s.se}}; }

}  // namespace

std::string matrix_to_json(const HermitianMatrix& m) { return dump(matrix_json(m)); }

HermitianMatrix matrix_from_json(const std::string& text) {
    return matrix_from(json::parse(text));
}

std::string matrix_to_csv(const HermitianMatrix& m, bool imaginary_part) {
    std::string out;
    const int p = m.dim();
    for (int r = 0; r < p; ++r) {
        for (int s = 0; s < p; ++s) {
            if (s) out += ',';
            append_full(out, imaginary_part ? m(r, s).imag() : m(r, s).real());
        }
        out += '\n';
    }
    return out;
}

HermitianMatrix matrix_from_csv(const std::string& re_text, const std::string& im_text) {
    const auto parse = [](const std::string& text) {
        std::vector<std::vector<double>> rows;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::vector<double> row;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    const auto re = parse(re_text);
    const auto im = parse(im_text);
    const std::size_t p = re.size();
    if (p == 0 || im.size() != p) throw ParseError("matrix CSV pair sizes differ");
    Eigen::MatrixXcd m(p, p);
    for (std::size_t r = 0; r < p; ++r) {
        if (re[r].size() != p || im[r].size() != p)
            throw ParseError("matrix CSV must be square");
        for (std::size_t s = 0; s < p; ++s)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) =
                Complex(re[r][s], im[r][s]);
    }
    return HermitianMatrix(m);
}

std::string whittle_fit_to_json(const WhittleFit& fit) {
    json diagnostics;
    std::vector<double> objective;
    std::vector<int> evaluations;
    std::vector<bool> boundary;
    for (const auto& pc : fit.per_component) {
        objective.push_back(pc.objective);
        evaluations.push_back(pc.evaluations);
        boundary.push_back(pc.boundary);
    }
    diagnostics["objective"] = objective;
    diagnostics["evaluations"] = evaluations;
    diagnostics["boundary"] = boundary;
    const json j{{"d_hat", std::vector<double>(fit.d_hat.d.begin(), fit.d_hat.d.end())},
                 {"m", fit.m},
                 {"bounds", {fit.d_hat.delta1, fit.d_hat.delta2}},
                 {"g_hat", matrix_json(fit.g_hat)},
                 {"diagnostics", diagnostics}};
    return dump(j);
}

std::string threshold_result_to_json(const ThresholdResult& res) {
    json j{{"rho_hat", res.rho_hat},
           {"g_thresholded", matrix_json(res.g_thresholded)},
           {"splits_used", res.splits_used}};
    if (!res.cv_curve.empty()) {
        json curve = json::array();
        for (const auto& [rho, risk] : res.cv_curve) curve.push_back({rho, risk});
        j["cv_curve"] = curve;
    }
    return dump(j);
}

std::string cv_curve_to_csv(const ThresholdResult& res) {
    std::string out = "rho,risk\n";
    for (const auto& [rho, risk] : res.cv_curve) {
        append_full(out, rho);
        out += ',';
        append_full(out, risk);
        out += '\n';
    }
    return out;
}

std::string glasso_path_to_json(const GlassoPath& path, double gamma) {
    const json j{{"rhos", path.rhos},
                 {"ebic", path.ebic_values},
                 {"nnz", path.nnz},
                 {"gamma", gamma},
                 {"selected", path.selected},
                 {"selected_rho", path.rhos[path.selected]},
                 {"p_hat", matrix_json(path.estimates[path.selected])},
                 {"warnings", path.warnings}};
    return dump(j);
}

std::string ebic_curve_to_csv(const GlassoPath& path) {
    std::string out = "rho,ebic,nnz\n";
    for (std::size_t i = 0; i < path.rhos.size(); ++i) {
        append_full(out, path.rhos[i]);
        out += ',';
        append_full(out, path.ebic_values[i]);
        out += ',';
        out += std::to_string(path.nnz[i]);
        out += '\n';
    }
    return out;
}

std::string edge_list_to_csv(const GlassoPath& path) {
    std::string out = "r,s,re,im\n";
    const HermitianMatrix& m = path.estimates[path.selected];
    for (int r = 0; r < m.dim(); ++r)
        for (int s = r + 1; s < m.dim(); ++s) {
            const Complex z = m(r, s);
            if (std::abs(z) <= 1e-12) continue;
            out += std::to_string(r + 1) + ',' + std::to_string(s + 1) + ',';
            append_full(out, z.real());
            out += ',';
            append_full(out, z.imag());
            out += '\n';
        }
    return out;
}

std::string dgp_spec_to_json(const DgpSpec& spec) {
    const json j{{"kind", dgp_kind_to_string(spec.kind)},
                 {"p", spec.p},
                 {"d0", std::vector<double>(spec.d0.begin(), spec.d0.end())},
                 {"g0", matrix_json(spec.g0)},
                 {"p0", matrix_json(spec.p0)}};
    return dump(j);
}

std::string bench_report_to_json(const BenchReport& report) {
    const BenchConfig& cfg = report.config;
    json reps = json::array();
    for (const auto& r : report.per_replication)
        reps.push_back({{"misspecification", r.misspecification},
                        {"mse_d", r.mse_d},
                        {"frobenius", r.frobenius_err},
                        {"spectral", r.spectral_err}});
    const json j{{"config",
                  {{"dgp", dgp_kind_to_string(cfg.dgp)},
                   {"p", cfg.p},
                   {"n", cfg.n},
                   {"replications", cfg.replications},
                   {"method", bench_method_to_string(cfg.method)},
                   {"seed", cfg.seed},
                   {"bounds", {cfg.delta1, cfg.delta2}},
                   {"gamma", cfg.gamma}}},
                 {"misspecification", stats_json(report.misspecification)},
                 {"mse_d", stats_json(report.mse_d)},
                 {"frobenius", stats_json(report.frobenius)},
                 {"spectral", stats_json(report.spectral)},
                 {"failures", report.failures},
                 {"per_replication", reps}};
    return dump(j);
}

std::string bench_report_to_csv(const BenchReport& report) {
    const BenchConfig& cfg = report.config;
    std::string out =
        "dgp,method,p,n,replications,misspecification,misspecification_se,"
        "mse_d,mse_d_se,frobenius,frobenius_se,spectral,spectral_se\n";
    out += dgp_kind_to_string(cfg.dgp) + ',' + bench_method_to_string(cfg.method) + ',' +
           std::to_string(cfg.p) + ',' + std::to_string(cfg.n) + ',' +
           std::to_string(cfg.replications);
    for (const MetricStats* s :
         {&report.misspecification, &report.mse_d, &report.frobenius, &report.spectral}) {
        out += ',';
        append_full(out, s->mean);
        out += ',';
        append_full(out, s->se);
    }
    out += '\n';
    return out;
}

}  // namespace lrw
