#pragma once

#include <vector>

#include "flagmorph/polyring.hpp"

namespace flagmorph::sym {

/// Which family a symmetric generator belongs to.
enum class SymKind { CompleteHomogeneous, Elementary, SquaredComplete };

/// Sum of all degree-u monomials in X1..Xk. Built by direct enumeration of
/// exponent vectors, so the term count is C(u+k-1, k-1) by construction.
Polynomial complete_homogeneous(int degree, int var_count);

/// Sum of all squarefree degree-u monomials in X1..Xk; zero when u > k.
Polynomial elementary(int degree, int var_count);

/// Q_v = the complete homogeneous polynomial of degree v evaluated on squared
/// variables; homogeneous of degree 2v with all-positive coefficients.
Polynomial q_poly(int index, int var_count);

Polynomial generator(SymKind kind, int degree, int var_count);

/// Exact value of the complete homogeneous polynomial at an integer point,
/// computed by enumeration without materializing the polynomial.
Int complete_homogeneous_value(int degree, const std::vector<Int>& point);

/// Exact value of the elementary symmetric polynomial at an integer point.
Int elementary_value(int degree, const std::vector<Int>& point);

/// Symbolic check of the even/odd degree split
///   h_j = sum over u+2v=j of e_u * Q_v
/// as canonical polynomials in k variables. Requires 1 <= j <= k.
bool claim_check(int j, int k);

/// Truncated generating-function identities, with series coefficients kept as
/// polynomials in X1..Xk:
///   (sum_j h_j t^j) * (sum_u e_u (-t)^u) = 1
///   (sum_u e_u t^u) * (sum_v Q_v t^{2v}) = sum_j h_j t^j
/// both checked through degree max_degree in t.
bool genfun_check(int k, int max_degree);

/// Alternating Newton-style sum: sum_{i=0}^{l} (-1)^i e_i h_{l-i} vanishes.
bool newton_identity_check(int l, int k);

enum class PositivityCertificate { Positive, ZeroAtOrigin };

struct PositivityResult {
    Int value;
    PositivityCertificate certificate;
};

/// Evaluates the even-degree complete homogeneous polynomial at an integer
/// tuple. Nonnegativity (with equality only at the origin) is enforced as a
/// hard runtime assertion; a violation indicates a broken build, not bad
/// input.
PositivityResult even_positivity_oracle(int m, const std::vector<Int>& point);

}  // namespace flagmorph::sym
