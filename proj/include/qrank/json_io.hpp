// Copyright 2026 The qrank authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>

#include "qrank/gabidulin.hpp"
#include "qrank/gf2field.hpp"
#include "qrank/qconstruct.hpp"

namespace qrank {

// Field elements and moduli serialize as lowercase hex of the little-endian
// coefficient bits (x^0 at bit 0), most significant nibble first.
std::string fe_to_hex(uint64_t bits);
uint64_t fe_from_hex(const std::string& hex);

nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

nlohmann::json basis_to_json(const Basis& b);
Basis basis_from_json(const nlohmann::json& j);

nlohmann::json mat_to_json(const MatF2& m);
MatF2 mat_from_json(const nlohmann::json& j);

nlohmann::json gabidulin_to_json(const GabidulinCode& c);
GabidulinCode gabidulin_from_json(const nlohmann::json& j);

/// Code bundle: {"m", "n", "generators", "params", "provenance"}.
nlohmann::json bundle_to_json(const BuiltCode& built);
/// Parses a bundle; the provenance block is optional.
struct ParsedBundle {
    BinarySymplecticCode code;
    QuantumCodeParams params;
    nlohmann::json provenance;  // possibly null
};
ParsedBundle bundle_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const DistanceCertificate& cert);

}  // namespace qrank
