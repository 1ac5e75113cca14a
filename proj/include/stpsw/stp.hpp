#pragma once

#include "stpsw/matrix.hpp"

namespace stpsw {

/// Standard Kronecker product; rows(a)·rows(b) x cols(a)·cols(b).
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Column j of the result is Col_j(a) ⊗ Col_j(b). Requires cols(a) == cols(b).
Matrix khatri_rao(const Matrix& a, const Matrix& b);

/// Semi-tensor product (a ⊗ I_{t/n})(b ⊗ I_{t/p}), t = lcm(cols(a), rows(b)).
/// Reduces to the ordinary product when cols(a) == rows(b).
Matrix stp(const Matrix& a, const Matrix& b);

}  // namespace stpsw
