#pragma once

#include "bihamil/matrix.hpp"

#include <optional>
#include <vector>

namespace bihamil {

/// Dimension of the span of a family of vectors in `ambient` dimensions.
std::size_t span_dim(const std::vector<Vec>& family, std::size_t ambient);

/// Greedy independent subfamily, keeping input order.
std::vector<Vec> independent_subset(const std::vector<Vec>& family, std::size_t ambient);
/// Indices of the greedy independent subfamily.
std::vector<std::size_t> independent_indices(const std::vector<Vec>& family, std::size_t ambient);

/// Basis of span(a) ∩ span(b). Throws std::invalid_argument on ambient mismatch.
std::vector<Vec> intersect_subspaces(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                     std::size_t ambient);
std::vector<Vec> sum_subspaces(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t ambient);

/// {xi : xi(v) = 0 for all v in span(subspace)} under the bilinear pairing.
std::vector<Vec> annihilator(const std::vector<Vec>& subspace, std::size_t ambient);

bool in_span(const std::vector<Vec>& basis, const Vec& v, std::size_t ambient);

/// Coefficients of v in an independent family, or nullopt when v is outside its span.
std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& v, std::size_t ambient);

}  // namespace bihamil
