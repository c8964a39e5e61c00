#pragma once

#include <json.hpp>

#include "nvol/piecewise.hpp"
#include "nvol/rational.hpp"

namespace nvol {

/// Rationals serialize as "p/q" strings; integers in JSON input are accepted too.
void to_json(nlohmann::json& j, const Rational& q);
void from_json(const nlohmann::json& j, Rational& q);

/// {"breakpoints": [...], "pieces": [[c0, c1, ...], ...], "head": ..., "tail": ...}
void to_json(nlohmann::json& j, const PiecewisePolynomial& f);
void from_json(const nlohmann::json& j, PiecewisePolynomial& f);

}  // namespace nvol
