#ifndef MWC_REPORT_HPP
#define MWC_REPORT_HPP

#include "mwc/graph.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mwc {

// One benchmark row, averaged over the runs of a single instance.
struct SolveReport {
    std::string instance;
    std::size_t n = 0;
    std::size_t m = 0;
    double density = 0.0;
    double kernel_n = 0.0;
    double kernel_m = 0.0;
    double w_best = 0.0;
    double t_sol = 0.0;
    std::optional<double> t_prv; // absent when not every run proved optimality
    double proven = 0.0;         // fraction of runs that proved optimality
    std::uint64_t seed = 0;
    std::string termination;
    std::map<std::string, std::uint64_t> rule_removals;
    std::vector<VertexId> witness; // members of the best run's clique, 0-based
};

// Fixed column contract:
//   instance,n,m,density,kernel_n,kernel_m,w_best,t_sol,t_prv,proven,seed
// density uses 6 decimals, w_best/t_sol/t_prv 2 decimals, kernel sizes and
// proven print with %g. The geometric-mean footer is computed from the
// values exactly as rounded into the rows.
extern const char* const kCsvHeader;

std::string to_csv_row(const SolveReport& report);
void write_csv(std::ostream& out, const std::vector<SolveReport>& rows, bool geomean_footer);
void write_json(std::ostream& out, const std::vector<SolveReport>& rows, bool summary);
void write_text(std::ostream& out, const SolveReport& report);

// Geometric mean; any zero (or negative) value pins the result to 0.
double geometric_mean(const std::vector<double>& values);

// Rounds like the CSV writer so recomputation from a parsed file agrees.
double csv_round(double value, int decimals);

} // namespace mwc

#endif
