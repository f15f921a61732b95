#pragma once

#include <json.hpp>

#include "tlfiber/classify.hpp"
#include "tlfiber/diagram.hpp"
#include "tlfiber/fiber.hpp"
#include "tlfiber/hopf.hpp"

namespace tlfiber {

using Json = nlohmann::ordered_json;

/// Rational "p/q" (q omitted when 1), complex-rational {"re","im"},
/// approximate complex [re, im].
Json scalar_to_json(const Scalar& s);
/// Field is taken from the encoding; plain numbers read as approximate complex
/// unless `hint` is exact and the number is an integer.
Scalar scalar_from_json(const Json& j, Field hint = Field::Rational);

/// {"scalar": ..., "rows": R, "cols": C, "data": [[...]]}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"source": m, "target": n, "pairs": [[a, b], ...], "loops": k}
Json diagram_to_json(const PlanarDiagram& d);
PlanarDiagram diagram_from_json(const Json& j);

/// {"source": m, "letters": [{"op": "cap"|"cup", "i": i}, ...]}
Json word_to_json(const TLWord& w);
TLWord word_from_json(const Json& j);

/// {"in": m, "out": n, "N": N, "scalar": ..., "data": [[...]]}
Json tensor_map_to_json(const TensorMap& t);

/// {"scalar": ..., "entries": [{"eigenvalue": "-3", "sizes": [1]}, ...]}
Json multiplicity_to_json(const MultiplicityFunction& mu);
MultiplicityFunction multiplicity_from_json(const Json& j);

/// {"n": N, "scalar": ..., "relations": [{"const", "lin", "quad"}, ...],
///  "coproduct": ..., "counit": ..., "antipode": [[...]], "star": {"T": [[...]], "q": ...}}
Json presentation_to_json(const HopfPresentation& p);
HopfPresentation presentation_from_json(const Json& j);

/// Reads and parses a JSON file; throws ParseError.
Json read_json_file(const std::string& path);

}  // namespace tlfiber
