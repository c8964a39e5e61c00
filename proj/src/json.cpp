#include "nvol/json.hpp"

#include "nvol/errors.hpp"

namespace nvol {

void to_json(nlohmann::json& j, const Rational& q) { j = q.str(); }

void from_json(const nlohmann::json& j, Rational& q) {
    if (j.is_string())
        q = Rational::parse(j.get<std::string>());
    else if (j.is_number_integer())
        q = Rational(j.get<long>());
    else
        throw ValidationError("expected a rational as \"p/q\" string or integer");
}

void to_json(nlohmann::json& j, const PiecewisePolynomial& f) {
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& p : f.pieces()) {
        nlohmann::json c = nlohmann::json::array();
        for (const auto& x : p.coefficients()) c.push_back(x);
        pieces.push_back(std::move(c));
    }
    j = {{"breakpoints", f.breakpoints()}, {"pieces", std::move(pieces)}, {"head", f.head()}, {"tail", f.tail()}};
}

void from_json(const nlohmann::json& j, PiecewisePolynomial& f) {
    std::vector<Polynomial> pieces;
    for (const auto& c : j.at("pieces")) pieces.emplace_back(c.get<std::vector<Rational>>());
    f = PiecewisePolynomial(j.at("breakpoints").get<std::vector<Rational>>(), std::move(pieces),
                            j.at("head").get<Rational>(), j.at("tail").get<Rational>());
}

}  // namespace nvol
