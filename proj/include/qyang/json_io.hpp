#pragma once

#include "qyang/element.hpp"
#include "qyang/report.hpp"

namespace qyang {

/// Element schema:
/// {"algebra":{"family":"q","size":K},"order":"lex"|"hc:K",
///  "terms":[{"coeff":"p/q","monomial":[{"i":1,"j":-2,"e":1},...]},...]}
ojson element_to_json(const Element& e);
Element element_from_json(const ojson& j);
Element element_from_json_text(const std::string& text);

}  // namespace qyang
