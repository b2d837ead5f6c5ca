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

#include "qrank/json_io.hpp"

#include <stdexcept>

namespace qrank {

using nlohmann::json;

std::string fe_to_hex(uint64_t bits) {
    if (bits == 0) return "0";
    std::string s;
    while (bits) {
        s.insert(s.begin(), "0123456789abcdef"[bits & 15]);
        bits >>= 4;
    }
    return s;
}

uint64_t fe_from_hex(const std::string& hex) {
    if (hex.empty() || hex.size() > 16) throw std::invalid_argument("bad hex element");
    uint64_t v = 0;
    for (char c : hex) {
        v <<= 4;
        if (c >= '0' && c <= '9')
            v |= static_cast<uint64_t>(c - '0');
        else if (c >= 'a' && c <= 'f')
            v |= static_cast<uint64_t>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            v |= static_cast<uint64_t>(c - 'A' + 10);
        else
            throw std::invalid_argument("bad hex element");
    }
    return v;
}

json field_to_json(const Field& f) {
    return json{{"degree", f.degree()}, {"modulus", fe_to_hex(f.modulus())}};
}

Field field_from_json(const json& j) {
    return Field(j.at("degree").get<unsigned>(), fe_from_hex(j.at("modulus").get<std::string>()));
}

namespace {

const char* kind_name(BasisKind k) {
    switch (k) {
        case BasisKind::general: return "general";
        case BasisKind::self_dual: return "self_dual";
        case BasisKind::normal: return "normal";
        case BasisKind::self_dual_normal: return "self_dual_normal";
    }
    return "general";
}

BasisKind kind_from_name(const std::string& s) {
    if (s == "general") return BasisKind::general;
    if (s == "self_dual") return BasisKind::self_dual;
    if (s == "normal") return BasisKind::normal;
    if (s == "self_dual_normal") return BasisKind::self_dual_normal;
    throw std::invalid_argument("unknown basis kind: " + s);
}

}  // namespace

json basis_to_json(const Basis& b) {
    json elems = json::array();
    for (uint64_t e : b.elements()) elems.push_back(fe_to_hex(e));
    json j{{"field", field_to_json(b.field())}, {"kind", kind_name(b.kind())},
           {"elements", elems}};
    j["generator"] = b.generator() ? json(fe_to_hex(*b.generator())) : json(nullptr);
    return j;
}

Basis basis_from_json(const json& j) {
    Field f = field_from_json(j.at("field"));
    std::vector<uint64_t> elems;
    for (const auto& e : j.at("elements")) elems.push_back(fe_from_hex(e.get<std::string>()));
    std::optional<uint64_t> gen;
    if (j.contains("generator") && !j.at("generator").is_null())
        gen = fe_from_hex(j.at("generator").get<std::string>());
    return Basis(f, elems, kind_from_name(j.at("kind").get<std::string>()), gen);
}

json mat_to_json(const MatF2& m) {
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r).to_string());
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

MatF2 mat_from_json(const json& j) {
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    MatF2 m(rows, cols);
    const auto& data = j.at("data");
    if (data.size() != rows) throw std::invalid_argument("matrix JSON: row count mismatch");
    for (size_t r = 0; r < rows; ++r) {
        BitVec v = BitVec::from_string(data[r].get<std::string>());
        if (v.size() != cols) throw std::invalid_argument("matrix JSON: column count mismatch");
        m.set_row(r, v);
    }
    return m;
}

json gabidulin_to_json(const GabidulinCode& c) {
    json alpha = json::array();
    for (uint64_t a : c.alpha()) alpha.push_back(fe_to_hex(a));
    return json{{"field", field_to_json(c.field())}, {"alpha", alpha}, {"k", c.dim()}};
}

GabidulinCode gabidulin_from_json(const json& j) {
    Field f = field_from_json(j.at("field"));
    std::vector<uint64_t> alpha;
    for (const auto& a : j.at("alpha")) alpha.push_back(fe_from_hex(a.get<std::string>()));
    return GabidulinCode(f, alpha, j.at("k").get<unsigned>());
}

json bundle_to_json(const BuiltCode& built) {
    json params{{"N", built.params.N},
                {"K", built.params.K},
                {"D_R", built.params.D_R ? json(*built.params.D_R) : json(nullptr)},
                {"certified", built.params.certified}};
    json prov{{"construction", built.provenance.construction},
              {"field", field_to_json(built.provenance.field)}};
    json alpha = json::array();
    for (uint64_t a : built.provenance.alpha) alpha.push_back(fe_to_hex(a));
    prov["alpha"] = alpha;
    prov["theta"] = built.provenance.theta ? json(fe_to_hex(*built.provenance.theta)) : json(nullptr);
    if (built.provenance.t_form) prov["T"] = mat_to_json(*built.provenance.t_form);
    if (built.provenance.d) prov["D"] = mat_to_json(*built.provenance.d);
    if (built.provenance.construction == "css") {
        prov["r"] = built.provenance.k;
        prov["s"] = built.provenance.s ? json(*built.provenance.s) : json(nullptr);
    } else {
        prov["k"] = built.provenance.k;
    }
    return json{{"m", built.code.layers()},
                {"n", built.code.cells()},
                {"generators", mat_to_json(built.code.generators())},
                {"params", params},
                {"provenance", prov}};
}

ParsedBundle bundle_from_json(const json& j) {
    unsigned layers = j.at("m").get<unsigned>();
    unsigned cells = j.at("n").get<unsigned>();
    BinarySymplecticCode code(layers, cells, mat_from_json(j.at("generators")));
    QuantumCodeParams params;
    const auto& p = j.at("params");
    params.N = p.at("N").get<unsigned>();
    params.K = p.at("K").get<unsigned>();
    if (p.contains("D_R") && !p.at("D_R").is_null()) params.D_R = p.at("D_R").get<unsigned>();
    params.certified = p.value("certified", false);
    json prov = j.value("provenance", json(nullptr));
    return ParsedBundle{std::move(code), params, std::move(prov)};
}

json certificate_to_json(const DistanceCertificate& cert) {
    json j{{"D_R", cert.d_r ? json(*cert.d_r) : json(nullptr)}, {"certified", cert.certified}};
    if (cert.d_r) {
        j["witness"] = cert.witness.to_string();
        j["witness_rank"] = cert.witness_rank;
        j["enumerated"] = cert.enumerated;
    }
    if (!cert.note.empty()) j["note"] = cert.note;
    return j;
}

}  // namespace qrank
