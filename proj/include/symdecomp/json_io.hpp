#ifndef SYMDECOMP_JSON_IO_HPP
#define SYMDECOMP_JSON_IO_HPP

#include <string_view>
#include <vector>

#include <json.hpp>

#include "symdecomp/ehrhart.hpp"
#include "symdecomp/polynomial.hpp"

namespace symdecomp {

using json = nlohmann::json;

// {"coeffs": ["1", "2/3", ...]}, rationals as strings in lowest terms.
json to_json(const Polynomial &p);
json to_json(const std::vector<Rational> &values);
json to_json(const LatticePolytope &P);

/// Extra keys are ignored. Throws InputError on anything malformed.
Polynomial polynomial_from_json(const json &j);
Polynomial parse_polynomial(std::string_view text);

// {"vertices": [[0,0],[1,0],...]}
LatticePolytope polytope_from_json(const json &j);
LatticePolytope parse_polytope(std::string_view text);

} // namespace symdecomp

#endif
