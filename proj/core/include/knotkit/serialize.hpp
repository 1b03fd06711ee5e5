#pragma once

#include <json.hpp>

#include "knotkit/bounds.hpp"
#include "knotkit/census.hpp"
#include "knotkit/diagram.hpp"
#include "knotkit/invariants.hpp"
#include "knotkit/laurent.hpp"
#include "knotkit/moves.hpp"
#include "knotkit/satellite.hpp"
#include "knotkit/structure.hpp"

// JSON forms of the library types. Diagrams use 1-based edge labels like the
// PD text form; big integers and rationals are strings. Layouts are listed in
// docs/formats.md.

namespace knotkit {

using json = nlohmann::ordered_json;

void to_json(json& j, const CrossingTag& t);
void from_json(const json& j, CrossingTag& t);
/// Throws MalformedCode (and whatever from_tuples throws) on bad input.
void to_json(json& j, const Diagram& d);
void from_json(const json& j, Diagram& d);

/// Exponents are those of the stored polynomial; `exponent_scale` 2 means
/// the variable is t^(1/2) (Jones).
json laurent_json(const LaurentPoly& p, std::string_view var = "A", int exponent_scale = 1);
LaurentPoly laurent_from_json(const json& j);

void to_json(json& j, const Move& m);
void from_json(const json& j, Move& m);
void to_json(json& j, const MoveTrace& t);
void from_json(const json& j, MoveTrace& t);

void to_json(json& j, const CutCircle& c);
void to_json(json& j, const PrimeResult& r);
void to_json(json& j, const CompanionDisk& d);
void from_json(const json& j, CompanionDisk& d);
void to_json(json& j, const Tangle& t);
void from_json(const json& j, Tangle& t);

void to_json(json& j, const AnnularDiagram& a);
void from_json(const json& j, AnnularDiagram& a);
void to_json(json& j, const SatelliteResult& r);

void to_json(json& j, const Fingerprint& f);

void to_json(json& j, const BoundCheck& c);
void to_json(json& j, const BoundReport& r);

void to_json(json& j, const CensusRow& r);
void from_json(const json& j, CensusRow& r);
void to_json(json& j, const CensusTable& t);
void from_json(const json& j, CensusTable& t);

}  // namespace knotkit
