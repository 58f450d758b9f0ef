#include "xlag/cli/app.hpp"

#include "xlag/core/error.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace xlag::cli {

nlohmann::ordered_json alpha_poly_json(const AlphaPoly& p) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) a.push_back({{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    return a;
}

AlphaPoly alpha_poly_from_json(const nlohmann::json& j) {
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(parse_rational(e.at("num").get<std::string>() + "/" + e.at("den").get<std::string>()));
    return AlphaPoly(std::move(c));
}

nlohmann::ordered_json xpoly_json(const XPoly& p) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) a.push_back(alpha_poly_json(c));
    return a;
}

XPoly xpoly_from_json(const nlohmann::json& j) {
    std::vector<AlphaPoly> c;
    for (const auto& e : j) c.push_back(alpha_poly_from_json(e));
    return XPoly(std::move(c));
}

void write_table_csv(const std::vector<TableRow>& rows, std::ostream& os) {
    os << "family,m,n,power,alpha_coefficients\n";
    for (const auto& r : rows)
        for (int k = 0; k <= r.poly.degree(); ++k) {
            os << r.family << ',' << r.m << ',' << r.n << ',' << k << ',';
            const AlphaPoly ck = r.poly.coeff(k);
            const auto& c = ck.coeffs();
            if (c.empty()) os << '0';
            for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << to_string(c[i]);
            os << '\n';
        }
}

std::vector<TableRow> parse_table_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "family,m,n,power,alpha_coefficients")
        throw DomainError("coefficient table: missing or unexpected header");
    std::vector<TableRow> rows;
    std::vector<std::vector<AlphaPoly>> coeffs;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(cell);
        if (f.size() != 5) throw DomainError("coefficient table: line " + std::to_string(lineno) + " needs 5 fields");
        int m = std::stoi(f[1]), n = std::stoi(f[2]), k = std::stoi(f[3]);
        std::vector<Rational> c;
        std::stringstream cs(f[4]);
        std::string tok;
        while (cs >> tok) c.push_back(parse_rational(tok));
        bool fresh = rows.empty() || rows.back().family != f[0] || rows.back().m != m || rows.back().n != n;
        if (fresh) {
            if (k != 0) throw DomainError("coefficient table: line " + std::to_string(lineno) + " starts a polynomial at power " + f[3]);
            rows.push_back({f[0], m, n, XPoly()});
            coeffs.emplace_back();
        } else if (k != static_cast<int>(coeffs.back().size())) {
            throw DomainError("coefficient table: line " + std::to_string(lineno) + " skips a power");
        }
        coeffs.back().push_back(AlphaPoly(std::move(c)));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].poly = XPoly(std::move(coeffs[i]));
    return rows;
}

} // namespace xlag::cli
