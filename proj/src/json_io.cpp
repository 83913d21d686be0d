#include "symdecomp/json_io.hpp"

#include <string>

#include "symdecomp/errors.hpp"

namespace symdecomp {

json to_json(const Polynomial &p)
{
    json coeffs = json::array();
    for (const auto &c : p.coeffs()) {
        coeffs.push_back(to_string(c));
    }
    return json{{"coeffs", coeffs}};
}

json to_json(const std::vector<Rational> &values)
{
    json out = json::array();
    for (const auto &v : values) {
        out.push_back(to_string(v));
    }
    return out;
}

json to_json(const LatticePolytope &P)
{
    return json{{"vertices", P.vertices()}};
}

Polynomial polynomial_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
        throw InputError("polynomial JSON needs a \"coeffs\" array");
    }
    std::vector<Rational> coeffs;
    for (const auto &item : j.at("coeffs")) {
        if (item.is_string()) {
            coeffs.push_back(parse_rational(item.get<std::string>()));
        } else if (item.is_number_integer()) {
            coeffs.emplace_back(item.get<long>());
        } else {
            throw InputError("polynomial coefficient must be a string \"p\" or \"p/q\": " + item.dump());
        }
    }
    return Polynomial(std::move(coeffs));
}

Polynomial parse_polynomial(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError(std::string("invalid polynomial JSON: ") + e.what());
    }
    return polynomial_from_json(j);
}

LatticePolytope polytope_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array()) {
        throw InputError("polytope JSON needs a \"vertices\" array");
    }
    std::vector<LatticePoint> vertices;
    for (const auto &v : j.at("vertices")) {
        if (!v.is_array()) {
            throw InputError("polytope vertex must be an array of integers: " + v.dump());
        }
        LatticePoint p;
        for (const auto &c : v) {
            if (!c.is_number_integer()) {
                throw InputError("polytope coordinates must be integers: " + v.dump());
            }
            p.push_back(c.get<std::int64_t>());
        }
        vertices.push_back(std::move(p));
    }
    return LatticePolytope(std::move(vertices));
}

LatticePolytope parse_polytope(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError(std::string("invalid polytope JSON: ") + e.what());
    }
    return polytope_from_json(j);
}

} // namespace symdecomp
