#pragma once

#include <json.hpp>

#include "braidk/combing.hpp"
#include "braidk/homology.hpp"
#include "braidk/int_matrix.hpp"
#include "braidk/kpair.hpp"

namespace braidk {

// Exact integers in JSON: plain numbers while they fit in 64 bits, decimal
// strings beyond that. Parsing accepts both.
nlohmann::json int_to_json(const Int& x);
Int int_from_json(const nlohmann::json& j);

// { "rows": r, "cols": c, "entries": [[...], ...] }
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

// { "free_rank": r, "torsion": [...] }
nlohmann::json abelian_to_json(const AbelianGroup& g);

// { "k0": ..., "k1": ..., "torsion_free": ..., "provenance": [...] }
nlohmann::json kpair_to_json(const KPair& k);

// { "n": n, "levels": [ [["A(3,4)", -1], ...], ... ] }, top level first.
nlohmann::json combed_to_json(const CombedForm& f);

// { "generators": [...], "relators": ["a1 b1 a1^-1 ...", ...] }
Presentation presentation_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const Presentation& p);

}  // namespace braidk
