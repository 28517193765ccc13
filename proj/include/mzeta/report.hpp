#pragma once
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "mzeta/bounds.hpp"
#include "mzeta/measures.hpp"
#include "mzeta/newton.hpp"
#include "mzeta/weights.hpp"
#include "mzeta/zeta.hpp"

namespace mz {

using Json = nlohmann::ordered_json;

Json upoly_json(const UPoly& p);  // [[deg, coeff], ...] ascending
UPoly upoly_from_json(const Json& j);
// {"numerator": [[deg, coeff], ...], "denominator": [[s, mult], ...]} for
// numerator / prod (u^s - 1)^mult
Json urat_json(const URat& r);

Json newton_json_value(const NewtonData& nd, const std::vector<std::string>& vars);
Json measures_json(const NewtonData& nd, const std::vector<FaceMeasure>& ms);
Json series_json(const ZetaSeries& s, bool breakdown);

// Document with schema "zeta/1". Signed series may be absent.
Json zeta_document(const std::string& poly_text, const std::vector<std::string>& vars, const NewtonData& nd,
                   const std::vector<FaceMeasure>& ms, const std::vector<ZetaSeries>& series, bool breakdown,
                   const std::optional<Json>& verification = std::nullopt);
// Reads the series of the given sign back from a zeta/1 document.
ZetaSeries series_from_zeta_document(const Json& doc, Sign sign = Sign::Naive);

// Document with schema "weights/1".
Json weights_document(const WeightReport& r, const std::optional<WHStructure>& truth);

std::string series_text(const ZetaSeries& s);
std::string weights_text(const WeightReport& r);

}  // namespace mz
