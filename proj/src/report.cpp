#include "mwc/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace mwc {

const char* const kCsvHeader =
    "instance,n,m,density,kernel_n,kernel_m,w_best,t_sol,t_prv,proven,seed";

double csv_round(double value, int decimals) {
    double scale = std::pow(10.0, decimals);
    return std::round(value * scale) / scale;
}

double geometric_mean(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    double log_sum = 0.0;
    for (double v : values) {
        if (v <= 0.0) return 0.0;
        log_sum += std::log(v);
    }
    return std::exp(log_sum / static_cast<double>(values.size()));
}

namespace {

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

} // namespace

std::string to_csv_row(const SolveReport& r) {
    std::string row = r.instance;
    row += "," + std::to_string(r.n);
    row += "," + std::to_string(r.m);
    row += "," + fmt("%.6f", r.density);
    row += "," + fmt("%g", csv_round(r.kernel_n, 6));
    row += "," + fmt("%g", csv_round(r.kernel_m, 6));
    row += "," + fmt("%.2f", r.w_best);
    row += "," + fmt("%.2f", r.t_sol);
    row += ",";
    if (r.t_prv) row += fmt("%.2f", *r.t_prv);
    row += "," + fmt("%g", r.proven);
    row += "," + std::to_string(r.seed);
    return row;
}

void write_csv(std::ostream& out, const std::vector<SolveReport>& rows, bool geomean_footer) {
    out << kCsvHeader << "\n";
    for (const auto& r : rows) out << to_csv_row(r) << "\n";
    if (!geomean_footer || rows.empty()) return;
    // the footer aggregates the values as rounded into the rows above
    std::vector<double> n, m, density, kn, km, w, ts, tp, proven;
    for (const auto& r : rows) {
        n.push_back(static_cast<double>(r.n));
        m.push_back(static_cast<double>(r.m));
        density.push_back(csv_round(r.density, 6));
        kn.push_back(csv_round(r.kernel_n, 6));
        km.push_back(csv_round(r.kernel_m, 6));
        w.push_back(csv_round(r.w_best, 2));
        ts.push_back(csv_round(r.t_sol, 2));
        if (r.t_prv) tp.push_back(csv_round(*r.t_prv, 2));
        proven.push_back(r.proven);
    }
    double proven_mean = 0.0;
    for (double p : proven) proven_mean += p;
    proven_mean /= static_cast<double>(proven.size());
    out << "geomean," << fmt("%.12g", geometric_mean(n)) << ","
        << fmt("%.12g", geometric_mean(m)) << "," << fmt("%.12g", geometric_mean(density))
        << "," << fmt("%.12g", geometric_mean(kn)) << "," << fmt("%.12g", geometric_mean(km))
        << "," << fmt("%.12g", geometric_mean(w)) << "," << fmt("%.12g", geometric_mean(ts))
        << ",";
    if (!tp.empty()) out << fmt("%.12g", geometric_mean(tp));
    out << "," << fmt("%g", proven_mean) << ",\n";
}

void write_json(std::ostream& out, const std::vector<SolveReport>& rows, bool summary) {
    nlohmann::json doc;
    doc["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["instance"] = r.instance;
        j["n"] = r.n;
        j["m"] = r.m;
        j["density"] = r.density;
        j["kernel_n"] = r.kernel_n;
        j["kernel_m"] = r.kernel_m;
        j["w_best"] = r.w_best;
        j["t_sol"] = r.t_sol;
        if (r.t_prv) j["t_prv"] = *r.t_prv;
        j["proven"] = r.proven;
        j["seed"] = r.seed;
        j["termination"] = r.termination;
        if (!r.rule_removals.empty()) j["rule_removals"] = r.rule_removals;
        if (!r.witness.empty()) {
            auto w = nlohmann::json::array();
            for (VertexId v : r.witness) w.push_back(v + 1); // external ids are 1-based
            j["clique"] = std::move(w);
        }
        doc["rows"].push_back(std::move(j));
    }
    if (summary && !rows.empty()) {
        std::vector<double> w, ts;
        for (const auto& r : rows) {
            w.push_back(csv_round(r.w_best, 2));
            ts.push_back(csv_round(r.t_sol, 2));
        }
        doc["summary"] = {{"geomean_w_best", geometric_mean(w)},
                          {"geomean_t_sol", geometric_mean(ts)},
                          {"instances", rows.size()}};
    }
    out << doc.dump(2) << "\n";
}

void write_text(std::ostream& out, const SolveReport& r) {
    out << r.instance << ": n=" << r.n << " m=" << r.m
        << " kernel=" << fmt("%g", r.kernel_n) << "/" << fmt("%g", r.kernel_m)
        << " w=" << fmt("%g", r.w_best) << " t_sol=" << fmt("%.3f", r.t_sol);
    if (r.t_prv) out << " t_prv=" << fmt("%.3f", *r.t_prv);
    out << " proven=" << fmt("%g", r.proven) << " seed=" << r.seed;
    if (!r.termination.empty()) out << " (" << r.termination << ")";
    out << "\n";
    for (const auto& [rule, removed] : r.rule_removals)
        if (removed > 0) out << "  rule " << rule << " removed " << removed << "\n";
}

} // namespace mwc
