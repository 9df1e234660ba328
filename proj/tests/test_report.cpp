#include "doctest.h"

#include "mwc/report.hpp"

#include <cmath>
#include <sstream>

using namespace mwc;

namespace {

SolveReport sample(const std::string& name, double w, double t) {
    SolveReport r;
    r.instance = name;
    r.n = 10;
    r.m = 20;
    r.density = 2.0 * 20 / (10 * 9);
    r.kernel_n = 4;
    r.kernel_m = 3;
    r.w_best = w;
    r.t_sol = t;
    r.t_prv = t + 0.5;
    r.proven = 1.0;
    r.seed = 1;
    return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

TEST_CASE("csv rows follow the fixed column contract") {
    std::ostringstream out;
    write_csv(out, {sample("a.clq", 100, 0.01)}, false);
    std::istringstream in(out.str());
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == kCsvHeader);
    auto cells = split(row, ',');
    REQUIRE(cells.size() == 11);
    CHECK(cells[0] == "a.clq");
    CHECK(cells[1] == "10");
    CHECK(cells[2] == "20");
    CHECK(cells[6] == "100.00");
    CHECK(cells[7] == "0.01");
    CHECK(cells[9] == "1");
}

TEST_CASE("t_prv stays empty when optimality was not proven") {
    SolveReport r = sample("x.clq", 5, 0.0);
    r.t_prv.reset();
    r.proven = 0.0;
    CHECK(to_csv_row(r).find(",,0,") != std::string::npos);
}

TEST_CASE("geometric mean footer matches recomputation from the rows") {
    std::vector<SolveReport> rows = {sample("a", 120, 0.02), sample("b", 80, 1.25),
                                     sample("c", 333, 0.07)};
    std::ostringstream out;
    write_csv(out, rows, true);
    std::istringstream in(out.str());
    std::string line, footer;
    std::vector<std::vector<std::string>> parsed;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        if (!line.empty()) parsed.push_back(split(line, ','));
    }
    REQUIRE(parsed.size() == 4);
    auto& foot = parsed.back();
    CHECK(foot[0] == "geomean");
    // recompute each numeric column from the printed row values
    for (std::size_t col : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u}) {
        double log_sum = 0.0;
        bool zero = false;
        for (std::size_t i = 0; i + 1 < parsed.size(); ++i) {
            double v = std::stod(parsed[i][col]);
            if (v <= 0) zero = true;
            else log_sum += std::log(v);
        }
        double expect = zero ? 0.0 : std::exp(log_sum / static_cast<double>(parsed.size() - 1));
        double got = std::stod(foot[col]);
        CHECK(std::abs(got - expect) <= 1e-9 * std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("geometric mean handles zeros and empty input") {
    CHECK(geometric_mean({}) == 0.0);
    CHECK(geometric_mean({2.0, 0.0}) == 0.0);
    CHECK(geometric_mean({4.0, 9.0}) == doctest::Approx(6.0));
}

TEST_CASE("json report carries rows and 1-based witnesses") {
    SolveReport r = sample("j.clq", 42, 0.5);
    r.witness = {0, 3, 7};
    std::ostringstream out;
    write_json(out, {r}, true);
    std::string s = out.str();
    CHECK(s.find("\"instance\": \"j.clq\"") != std::string::npos);
    CHECK(s.find("[\n        1,\n        4,\n        8\n      ]") != std::string::npos);
    CHECK(s.find("\"summary\"") != std::string::npos);
}
