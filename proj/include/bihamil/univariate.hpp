#pragma once

#include "bihamil/matrix.hpp"

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace bihamil {

/// Dense univariate polynomial over Q(i), coefficients from degree 0 upward.
/// The zero polynomial is the empty vector.
using UPoly = std::vector<GaussianRational>;

void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for zero
UPoly monic(const UPoly& p);
UPoly derivative(const UPoly& p);
UPoly multiply(const UPoly& a, const UPoly& b);
/// Quotient and remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
GaussianRational eval(const UPoly& p, const GaussianRational& x);
std::complex<long double> eval(const UPoly& p, std::complex<long double> x);

/// Yun's algorithm: p = lc * prod f_k^k with squarefree, pairwise coprime monic f_k.
/// Returns (f_k, k) for nonconstant factors, k ascending.
std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& p);

/// Monic characteristic polynomial det(xI - m) (Faddeev–LeVerrier, exact).
UPoly characteristic_polynomial(const Matrix& m);

/// q(m) for a square matrix m.
Matrix evaluate_matrix(const UPoly& q, const Matrix& m);

/// Floating approximations of all roots of a squarefree polynomial (Aberth iteration).
std::vector<std::complex<long double>> approximate_roots(const UPoly& p);

/// A Gaussian rational close to `approx` that is an exact root of p, if one is found
/// among the continued-fraction convergents of its real and imaginary parts.
std::optional<GaussianRational> recover_exact_root(const UPoly& p, std::complex<long double> approx);

std::string to_string(const UPoly& p, const char* var = "x");

}  // namespace bihamil
