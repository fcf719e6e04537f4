#pragma once

// Diagram files: {"knots":[{"tb","rot","coeff"}], "lk":[[...]],
// "components":[{"tb","rot","lk"}], "lk_pre":[[...]], "s3":bool}.

#include <json.hpp>

#include "leghopf/surgery.hpp"

namespace leghopf::app {

nlohmann::json to_json(const surgery::SurgeryDiagram& d);

// Throws Error(InvalidDiagram) on missing fields or wrong shapes.
surgery::SurgeryDiagram diagram_from_json(const nlohmann::json& j);

// Integers are written as JSON numbers when they fit, otherwise as strings;
// rationals as "p/q" strings unless integral.
nlohmann::json int_json(const Int& v);
nlohmann::json rational_json(const Rational& r);

} // namespace leghopf::app
