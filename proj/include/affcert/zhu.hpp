#pragma once

#include "affcert/uea.hpp"
#include "affcert/vacuum.hpp"

namespace affcert {

/// Image of a vacuum element in U(g) under A(V^k(g)) ~ U(g): the
/// monomial a1(-n1-1)...ar(-nr-1)|0> maps to
/// (-1)^(n1+...+nr) ar...a1 (reverse-order product), PBW-normalized.
UeaElement zhu_image(const Uea& uea, const VacuumElement& v);

/// Independent recursive implementation used for cross-validation:
/// a(-n-2)u = -a(-n-1)u and [a(-1)u] = a.[u] - [a,[u]], reducing the
/// leftmost mode first.
UeaElement zhu_image_oracle(const Uea& uea, const VacuumElement& v);

}  // namespace affcert
