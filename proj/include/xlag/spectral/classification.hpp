#pragma once

#include "xlag/core/alpha_poly.hpp"
#include "xlag/exceptional/family.hpp"

#include <string>
#include <vector>

namespace xlag {

enum class Endpoint { Zero, Infinity };
enum class EndpointKind { LimitPoint, LimitCircle };

struct EndpointClass {
    Endpoint endpoint;
    EndpointKind kind;
};

// Both entries equal: (0,0) or (1,1).
struct DeficiencyIndex {
    int plus = 0, minus = 0;
    friend bool operator==(const DeficiencyIndex&, const DeficiencyIndex&) = default;
};

enum class BoundaryKind {
    None,
    WeightedDerivative,  // lim x^{a+1} f'(x) = 0
    EulerCombination,    // lim (x f'(x) + a f(x)) = 0
};

struct Classification {
    EndpointClass at_zero;
    EndpointClass at_infinity;
    DeficiencyIndex deficiency;
};

// Closed-form rules. Infinity is always limit point. The origin is limit
// circle for Type I when 0 < a < 1, for Type II when m = 0 and -1 < a < 1 or
// m = 1 and 0 < a < 1, and always for Type III. Throws DomainError outside the
// family's parameter range.
Classification classify(Family f, int m, double a);

// The two self-adjoint operators on the Type I space differ only in the
// condition at the origin.
enum class OperatorTag { TypeI, TypeII, TypeIII, TypeIAlt };

std::string operator_name(OperatorTag op);       // "T_I", "T_II", "T_III", "S_I"
OperatorTag parse_operator(const std::string& s);  // throws DomainError
Family operator_family(OperatorTag op);

// Throws DomainError when a is outside the operator's range; the alternate
// operator needs 0 < a < 1.
void require_operator_alpha(OperatorTag op, int m, double a);

BoundaryKind boundary_condition(OperatorTag op, int m, double a);
std::string boundary_text(BoundaryKind k);  // "none", "lim x^{a+1} f' = 0", ...

// Roots of the indicial equation r (r + a) = 0 at the origin.
struct IndicialRoots {
    AlphaPoly first;   // 0
    AlphaPoly second;  // -a
    // Numeric instance; degenerate when both roots coincide (a = 0).
    double first_at(double) const { return 0.0; }
    double second_at(double a) const { return -a; }
    bool degenerate_at(double a) const { return a == 0.0; }
};
IndicialRoots frobenius_indicial(Family f);

struct SpectrumEntry {
    int degree;
    double eigenvalue;
};

struct SpectrumSpec {
    OperatorTag op;
    int m;
    double a;
    std::string description;  // eigenvalue map over the degree set
    std::vector<SpectrumEntry> entries;
};

// The lowest `cutoff` eigenvalues with the degree of each eigenfunction:
// n - m for T_I and T_II, n - m + a for T_III, n - m - a for S_I.
SpectrumSpec spectrum(OperatorTag op, int m, double a, int cutoff);

} // namespace xlag
