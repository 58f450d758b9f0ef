#pragma once

#include <string>
#include <vector>

namespace xlag {

enum class Family { TypeI, TypeII, TypeIII };

std::string family_name(Family f);       // "I", "II", "III"
Family parse_family(const std::string& s);  // accepts "I", "1", "TypeI", ...

// Smallest codimension index accepted by the family (0 for Type II).
int min_m(Family f);

// Numeric parameter range on which the weight is positive and integrable:
// Type I a > 0, Type II a > m - 1 (and a > -1), Type III -1 < a < 0.
bool alpha_admissible(Family f, int m, double a);
// Throws DomainError with a readable message when the range is violated.
void require_alpha(Family f, int m, double a);
std::string alpha_range_text(Family f, int m);

// Degrees present in the family: Types I and II {m, m+1, ...};
// Type III {0} together with {m+1, m+2, ...}.
class DegreeSet {
public:
    DegreeSet(Family f, int m);

    Family family() const { return family_; }
    int m() const { return m_; }
    bool contains(int n) const;
    std::vector<int> missing() const;
    // The first `count` admissible degrees in increasing order.
    std::vector<int> first(int count) const;
    // Admissible degrees not exceeding max_n.
    std::vector<int> up_to(int max_n) const;
    // Throws DegreeNotAdmissible describing the excluded set.
    void require(int n) const;

private:
    Family family_;
    int m_;
};

} // namespace xlag
