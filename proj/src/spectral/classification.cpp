#include "xlag/spectral/classification.hpp"

#include "xlag/core/error.hpp"

namespace xlag {

Classification classify(Family f, int m, double a) {
    require_alpha(f, m, a);
    if (a == 0.0) throw DomainError("indicial roots coincide at a = 0; not classified");
    bool circle = false;
    switch (f) {
    case Family::TypeI: circle = a < 1; break;
    case Family::TypeII: circle = (m == 0 && a > -1 && a < 1) || (m == 1 && a > 0 && a < 1); break;
    case Family::TypeIII: circle = true; break;
    }
    Classification c;
    c.at_zero = {Endpoint::Zero, circle ? EndpointKind::LimitCircle : EndpointKind::LimitPoint};
    c.at_infinity = {Endpoint::Infinity, EndpointKind::LimitPoint};
    c.deficiency = circle ? DeficiencyIndex{1, 1} : DeficiencyIndex{0, 0};
    return c;
}

std::string operator_name(OperatorTag op) {
    switch (op) {
    case OperatorTag::TypeI: return "T_I";
    case OperatorTag::TypeII: return "T_II";
    case OperatorTag::TypeIII: return "T_III";
    case OperatorTag::TypeIAlt: return "S_I";
    }
    return "";
}

OperatorTag parse_operator(const std::string& s) {
    for (OperatorTag op : {OperatorTag::TypeI, OperatorTag::TypeII, OperatorTag::TypeIII, OperatorTag::TypeIAlt})
        if (operator_name(op) == s) return op;
    throw DomainError("unknown operator '" + s + "' (expected T_I, T_II, T_III or S_I)");
}

Family operator_family(OperatorTag op) {
    switch (op) {
    case OperatorTag::TypeII: return Family::TypeII;
    case OperatorTag::TypeIII: return Family::TypeIII;
    default: return Family::TypeI;
    }
}

void require_operator_alpha(OperatorTag op, int m, double a) {
    require_alpha(operator_family(op), m, a);
    if (op == OperatorTag::TypeIAlt && !(a > 0 && a < 1))
        throw DomainError("S_I needs 0 < a < 1, got a = " + std::to_string(a));
}

BoundaryKind boundary_condition(OperatorTag op, int m, double a) {
    require_operator_alpha(op, m, a);
    if (op == OperatorTag::TypeIAlt) return BoundaryKind::EulerCombination;
    Classification c = classify(operator_family(op), m, a);
    return c.deficiency == DeficiencyIndex{1, 1} ? BoundaryKind::WeightedDerivative : BoundaryKind::None;
}

std::string boundary_text(BoundaryKind k) {
    switch (k) {
    case BoundaryKind::None: return "none";
    case BoundaryKind::WeightedDerivative: return "lim x^{a+1} f' = 0";
    case BoundaryKind::EulerCombination: return "lim (x f' + a f) = 0";
    }
    return "";
}

IndicialRoots frobenius_indicial(Family) { return {AlphaPoly(0), AlphaPoly::linear(-1, 0)}; }

SpectrumSpec spectrum(OperatorTag op, int m, double a, int cutoff) {
    require_operator_alpha(op, m, a);
    if (cutoff < 1) throw DomainError("spectrum cutoff must be at least 1");
    SpectrumSpec s{op, m, a, "", {}};
    // The alternate operator's eigenfunctions are x^{-a} times Type III
    // polynomials, so it shares the Type III degree labels.
    Family labels = op == OperatorTag::TypeIAlt ? Family::TypeIII : operator_family(op);
    double shift = 0;
    switch (op) {
    case OperatorTag::TypeI:
    case OperatorTag::TypeII: s.description = "n - m, n = m, m+1, ...  (the non-negative integers)"; break;
    case OperatorTag::TypeIII:
        s.description = "n - m + a, n = 0, m+1, m+2, ...";
        shift = a;
        break;
    case OperatorTag::TypeIAlt:
        s.description = "n - m - a, n = 0, m+1, m+2, ...";
        shift = -a;
        break;
    }
    for (int n : DegreeSet(labels, m).first(cutoff)) s.entries.push_back({n, n - m + shift});
    return s;
}

} // namespace xlag
