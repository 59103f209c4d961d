#pragma once

#include "bihamil/catalog.hpp"
#include "bihamil/lie_algebra.hpp"
#include "bihamil/pencil.hpp"
#include "bihamil/poisson.hpp"

#include <json.hpp>

#include <string>

namespace bihamil {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const GaussianRational& z);
Json to_json(const Vec& v);
Json to_json(const LambdaPair& l);

/// {"name", "dim", "labels", "brackets": [{"i","j","k","re","im"}]}, indices from 1.
Json algebra_to_json(const LieAlgebraSpec& g);
/// Throws InputError on malformed input, complex constants or conflicting duplicates.
LieAlgebraSpec algebra_from_json(const Json& j);

/// {"kind", "dim", "terms": [{"i","j","coeff","exponents"}]}, indices from 1.
Json bivector_to_json(const BivectorField& c);
BivectorField bivector_from_json(const Json& j);
Json pair_to_json(const BivectorPair& p);
BivectorPair pair_from_json(const Json& j);

/// Literal "(1,i,0)" with Gaussian-rational entries. Throws InputError.
Vec parse_point_literal(const std::string& text);
/// Array of {"re","im"} objects or of Gaussian-rational strings.
Vec point_from_json(const Json& j);

/// Throws InputError when the file is missing or not JSON.
Json load_json_file(const std::string& path);

}  // namespace bihamil
