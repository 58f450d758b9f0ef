#include "xlag/exceptional/family.hpp"

#include "xlag/core/error.hpp"

#include <sstream>

namespace xlag {

std::string family_name(Family f) {
    switch (f) {
    case Family::TypeI: return "I";
    case Family::TypeII: return "II";
    case Family::TypeIII: return "III";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "I" || s == "1" || s == "TypeI" || s == "typeI") return Family::TypeI;
    if (s == "II" || s == "2" || s == "TypeII" || s == "typeII") return Family::TypeII;
    if (s == "III" || s == "3" || s == "TypeIII" || s == "typeIII") return Family::TypeIII;
    throw DomainError("unknown family '" + s + "' (expected I, II or III)");
}

int min_m(Family f) { return f == Family::TypeII ? 0 : 1; }

bool alpha_admissible(Family f, int m, double a) {
    switch (f) {
    case Family::TypeI: return a > 0.0;
    case Family::TypeII: return a > m - 1.0 && a > -1.0;
    case Family::TypeIII: return a > -1.0 && a < 0.0;
    }
    return false;
}

std::string alpha_range_text(Family f, int m) {
    switch (f) {
    case Family::TypeI: return "a > 0";
    case Family::TypeII: return m == 0 ? "a > -1" : "a > " + std::to_string(m - 1);
    case Family::TypeIII: return "-1 < a < 0";
    }
    return "";
}

void require_alpha(Family f, int m, double a) {
    if (!alpha_admissible(f, m, a)) {
        std::ostringstream os;
        os << "a = " << a << " outside the Type " << family_name(f) << " range " << alpha_range_text(f, m)
           << " (m = " << m << ")";
        throw DomainError(os.str());
    }
}

DegreeSet::DegreeSet(Family f, int m) : family_(f), m_(m) {
    if (m < min_m(f))
        throw DegreeNotAdmissible("Type " + family_name(f) + " needs m >= " + std::to_string(min_m(f)));
}

bool DegreeSet::contains(int n) const {
    if (n < 0) return false;
    if (family_ == Family::TypeIII) return n == 0 || n >= m_ + 1;
    return n >= m_;
}

std::vector<int> DegreeSet::missing() const {
    std::vector<int> out;
    if (family_ == Family::TypeIII)
        for (int n = 1; n <= m_; ++n) out.push_back(n);
    else
        for (int n = 0; n < m_; ++n) out.push_back(n);
    return out;
}

std::vector<int> DegreeSet::first(int count) const {
    std::vector<int> out;
    for (int n = 0; static_cast<int>(out.size()) < count; ++n)
        if (contains(n)) out.push_back(n);
    return out;
}

std::vector<int> DegreeSet::up_to(int max_n) const {
    std::vector<int> out;
    for (int n = 0; n <= max_n; ++n)
        if (contains(n)) out.push_back(n);
    return out;
}

void DegreeSet::require(int n) const {
    if (contains(n)) return;
    throw DegreeNotAdmissible("degree " + std::to_string(n) + " excluded for Type " + family_name(family_) +
                              ", m=" + std::to_string(m_));
}

} // namespace xlag
