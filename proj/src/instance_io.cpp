/*
   Copyright 2026 The hopfkernel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hopfkernel/instance_io.hpp"

#include <cmath>
#include <fstream>

#include "hopfkernel/errors.hpp"

namespace hopfkernel {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key))
        throw StructuralError(std::string("instance document lacks field '") + key + "'");
    return doc.at(key);
}

std::size_t as_index(const json& v, const char* what) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw StructuralError(std::string(what) + " must be a nonnegative integer");
    return v.get<std::size_t>();
}

FusionRing ring_from(const json& doc, const char* irr_key, const char* dual_key,
                     const char* fusion_key) {
    const auto& irr = field(doc, irr_key);
    if (!irr.is_array()) throw StructuralError(std::string(irr_key) + " must be an array");
    std::vector<std::string> labels;
    std::vector<long long> degrees;
    for (const auto& e : irr) {
        if (!e.is_object() || !e.contains("label") || !e.contains("degree"))
            throw StructuralError(std::string(irr_key) + " entries need 'label' and 'degree'");
        labels.push_back(e.at("label").get<std::string>());
        if (!e.at("degree").is_number_integer())
            throw StructuralError(std::string(irr_key) + " degree must be an integer");
        degrees.push_back(e.at("degree").get<long long>());
    }
    std::vector<std::size_t> dual;
    for (const auto& v : field(doc, dual_key)) dual.push_back(as_index(v, dual_key));
    std::vector<FusionEntry> entries;
    for (const auto& q : field(doc, fusion_key)) {
        if (!q.is_array() || q.size() != 4)
            throw StructuralError(std::string(fusion_key) + " entries must be [i,j,k,n]");
        FusionEntry e;
        e.i = as_index(q[0], fusion_key);
        e.j = as_index(q[1], fusion_key);
        e.k = as_index(q[2], fusion_key);
        if (!q[3].is_number_integer())
            throw StructuralError(std::string(fusion_key) + " multiplicity must be an integer");
        e.n = q[3].get<long long>();
        entries.push_back(e);
    }
    return FusionRing(std::move(labels), std::move(degrees), std::move(dual), std::move(entries));
}

}  // namespace

RawInstance raw_instance_from_json(const json& doc) {
    try {
        RawInstance raw;
        raw.name = field(doc, "name").get<std::string>();
        if (!field(doc, "dim").is_number_integer())
            throw StructuralError("dim must be an integer");
        raw.dim = doc.at("dim").get<long long>();
        raw.ring_h = ring_from(doc, "irr_h", "dual_h", "fusion_h");
        raw.ring_hstar = ring_from(doc, "irr_hstar", "dual_hstar", "fusion_hstar");
        for (const auto& row : field(doc, "eval")) {
            std::vector<Complex> r;
            for (const auto& c : row) {
                if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
                    throw StructuralError("eval entries must be [re, im]");
                r.emplace_back(c[0].get<double>(), c[1].get<double>());
            }
            raw.eval.push_back(std::move(r));
        }
        if (doc.contains("partition_hint")) {
            std::vector<std::vector<std::size_t>> hint;
            for (const auto& block : doc.at("partition_hint")) {
                std::vector<std::size_t> b;
                for (const auto& v : block) b.push_back(as_index(v, "partition_hint"));
                hint.push_back(std::move(b));
            }
            raw.partition_hint = std::move(hint);
        }
        return raw;
    } catch (const json::exception& e) {
        throw StructuralError(std::string("malformed instance document: ") + e.what());
    }
}

nlohmann::ordered_json instance_to_json(const RawInstance& raw) {
    nlohmann::ordered_json doc;
    doc["name"] = raw.name;
    doc["dim"] = raw.dim;
    auto ring_fields = [&](const FusionRing& r, const char* irr, const char* dual,
                           const char* fusion) {
        auto arr = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < r.size(); ++i)
            arr.push_back({{"label", r.label(i)}, {"degree", r.degree(i)}});
        doc[irr] = std::move(arr);
        doc[dual] = r.duals();
        auto f = nlohmann::ordered_json::array();
        for (const auto& e : r.entries()) f.push_back({e.i, e.j, e.k, e.n});
        doc[fusion] = std::move(f);
    };
    ring_fields(raw.ring_h, "irr_h", "dual_h", "fusion_h");
    ring_fields(raw.ring_hstar, "irr_hstar", "dual_hstar", "fusion_hstar");
    auto ev = nlohmann::ordered_json::array();
    for (const auto& row : raw.eval) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& c : row) {
            // Clean -0.0 and sub-ulp noise so files diff cleanly.
            auto clean = [](double v) { return std::abs(v) < 1e-14 ? 0.0 : v; };
            r.push_back({clean(c.real()), clean(c.imag())});
        }
        ev.push_back(std::move(r));
    }
    doc["eval"] = std::move(ev);
    if (raw.partition_hint) doc["partition_hint"] = *raw.partition_hint;
    return doc;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw StructuralError("cannot parse " + path.string() + ": " + e.what());
    }
}

RawInstance read_instance_file(const std::filesystem::path& path) {
    return raw_instance_from_json(read_json_file(path));
}

HopfPair load_instance(const std::filesystem::path& path, const Tolerance& tol) {
    return validate_pair(read_instance_file(path), tol);
}

void write_instance_file(const std::filesystem::path& path, const HopfPair& pair) {
    std::ofstream out(path);
    if (!out) throw StructuralError("cannot write " + path.string());
    out << instance_to_json(pair.to_raw()).dump(1) << "\n";
}

}  // namespace hopfkernel
