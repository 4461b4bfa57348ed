#pragma once

#include <string>
#include <vector>

#include "affcert/matrix.hpp"
#include "affcert/vacuum.hpp"

namespace affcert {

struct SingularCheck {
    std::string label;       // operator applied, e.g. "e[1,2](0)"
    VacuumElement residual;  // image of v under the operator
    bool zero = false;
};

/// Result of applying the raising-operator set {e_{i,i+1}(0)} and
/// f_{1,n}(1) to a homogeneous vector; pass iff every residual is zero.
struct SingularReport {
    Weight weight;
    long degree = 0;
    std::vector<SingularCheck> checks;
    bool pass = false;
};

/// Throws std::invalid_argument when v is not homogeneous.
SingularReport verify_singular(const Vacuum& vac, const VacuumElement& v);

/// Extended variant also applying e_{i,j}(0) for all i < j and x(1)
/// for every generator x.
SingularReport verify_singular_extended(const Vacuum& vac, const VacuumElement& v);

/// Exact basis of the joint kernel of the raising operators on the
/// (lambda, d) weight component. Every returned element passes
/// verify_singular (checked internally).
std::vector<VacuumElement> search_singular(const Vacuum& vac, const Weight& lambda, long d);

}  // namespace affcert
