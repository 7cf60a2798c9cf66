#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tropos/factorization.hpp"
#include "tropos/grassmannian.hpp"
#include "tropos/matrix.hpp"
#include "tropos/monge.hpp"
#include "tropos/networks.hpp"
#include "tropos/positivity.hpp"
#include "tropos/spectral.hpp"

namespace tropos {

using Json = nlohmann::ordered_json;

// Parses JSON keeping every non-integer number as its literal text (a JSON
// string), so decimals convert to rationals exactly. Throws ParseError.
Json parse_json_exact(std::string_view text);
Json read_json_file(const std::string& path);

// Scalars: integers that fit 64 bits as numbers, other rationals as "p/q"
// strings, −∞ as "-inf". Inputs accept numbers, "p/q", decimals, "-inf".
Json to_json(const Rational& x);
Json to_json(const TropScalar& x);
Rational rational_from_json(const Json& j);
TropScalar trop_from_json(const Json& j);
SeriesRat series_from_json(const Json& j);

// {"rows": n, "cols": m, "entries": [[...], ...]}
Json to_json(const TropMatrix& a);
Json to_json(const SeriesMatrix& a);
Json to_json(const Matrix<Rational>& a);
Json to_json(const BoolMatrix& a);
TropMatrix trop_matrix_from_json(const Json& j);
SeriesMatrix series_matrix_from_json(const Json& j);

// {"n": n, "factors": [{"kind": "Lower", "i": 1, "a": ...}]}, i 1-based.
Json factors_to_json(const std::vector<JacobiFactor>& fs, std::size_t n);
std::pair<std::size_t, std::vector<JacobiFactor>> factors_from_json(const Json& j);

// {"k": k, "n": n, "coords": [{"subset": [1, 2], "value": ...}]}, 1-based.
Json to_json(const TropPlucker& p);
Json to_json(const SeriesPlucker& p);
TropPlucker plucker_from_json(const Json& j);

// {"nodes": [{id, col, row}], "edges": [{from, to, weight}], "sources", "targets"}
Json to_json(const TropNetwork& g);
TropNetwork network_from_json(const Json& j);

Json index_set_to_json(const IndexSet& s);  // 1-based
Json to_json(const PositivityReport& r);
Json to_json(const StaircaseDecomposition& d);
Json to_json(const TropCharPoly& p);
Json to_json(const EigenSpectrum& s);
Json to_json(const StiefelInversion& inv);

}  // namespace tropos
