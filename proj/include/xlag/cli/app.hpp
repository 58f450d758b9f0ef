#pragma once

#include "xlag/cli/report.hpp"
#include "xlag/core/x_poly.hpp"
#include "xlag/exceptional/family.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace xlag::cli {

struct RunOptions {
    bool color = false;
};

// Entry point shared by the executable and the tests; args excludes the
// program name. Exit status: 0 all checks pass, 1 some check fails,
// 2 usage or parameter error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& opt = {});

// "3" or "1..4", inclusive.
struct IntRange {
    int lo = 0, hi = 0;
};
IntRange parse_range(const std::string& s);
// "5,10,20".
std::vector<int> parse_int_list(const std::string& s);

// Exact serialization: an AlphaPoly is an ascending array of {num, den}
// objects with decimal strings; an XPoly is an ascending array of those.
nlohmann::ordered_json alpha_poly_json(const AlphaPoly& p);
AlphaPoly alpha_poly_from_json(const nlohmann::json& j);
nlohmann::ordered_json xpoly_json(const XPoly& p);
XPoly xpoly_from_json(const nlohmann::json& j);

// Coefficient tables in CSV, one row per power of x:
//   family,m,n,power,alpha_coefficients
// with the coefficient written as space-separated ascending rationals.
struct TableRow {
    std::string family;
    int m = 0, n = 0;
    XPoly poly;
};
void write_table_csv(const std::vector<TableRow>& rows, std::ostream& os);
std::vector<TableRow> parse_table_csv(std::istream& is);

struct SuiteOptions {
    std::optional<Family> family;
    IntRange m{1, 3};
    IntRange k{1, 8};
    std::optional<double> alpha;
    std::optional<int> nmax;  // largest degree for norms and gram; default m + 8
};

// suite is identities, norms, gram, spectral, appendix or all.
Report verify_suite(const std::string& suite, const SuiteOptions& opt);

} // namespace xlag::cli
