#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "poset.hpp"
#include "quantale.hpp"
#include "value.hpp"
#include "vcat.hpp"
#include "vrel.hpp"

/**
 * @file instance.hpp
 *
 * Instance documents in JSON syntax. Rationals are "p/q" strings; 0 and 1
 * may also be written as numbers or booleans.
 *
 *   {"kind": "poset", "tensor": "lukasiewicz", "grid": 2, "leq": [[1,1],[0,1]]}
 *   {"kind": "vcategory", "grid": 2, "matrix": [["1","1/2"],["0","1"]], "labels": ["p","q"]}
 *   {"kind": "distributor", "source": [[1]], "target": [[1,1],[0,1]], "matrix": [[1,0]]}
 *   {"kind": "generators", "leq": [[1,1],[0,1]], "generators": [["1","0"],["1","1"]]}
 *
 * A tensor is a flag string or {"ordinal": [{"a": "1/4", "b": "3/4", "inner": ...}]}.
 */

namespace qcat {

enum class InstanceKind { Poset, VCategory, Distributor, Generators };

inline const char* to_string(InstanceKind k) {
    switch (k) {
    case InstanceKind::Poset: return "poset";
    case InstanceKind::VCategory: return "vcategory";
    case InstanceKind::Distributor: return "distributor";
    case InstanceKind::Generators: return "generators";
    }
    return "?";
}

struct InstanceDoc {
    InstanceKind kind = InstanceKind::Poset;
    TNormSpec tensor = TNormSpec::lukasiewicz();
    std::optional<std::int64_t> grid;
    std::optional<FinPoset> poset;        // poset, generators; distributor source
    std::optional<FinPoset> target;       // distributor target
    std::optional<VCategory> category;    // vcategory
    std::optional<VRelation> relation;    // distributor matrix
    std::vector<std::vector<Value>> generators;
};

namespace detail {

using json = nlohmann::json;

inline Value json_value(const json& j, const std::string& where) {
    try {
        if (j.is_string()) return Value::parse(j.get<std::string>());
        if (j.is_boolean()) return j.get<bool>() ? Value::one() : Value::zero();
        if (j.is_number_integer()) {
            const auto v = j.get<std::int64_t>();
            if (v < 0 || v > 1) throw InputError(ErrorCode::OutOfRange, std::to_string(v) + " is outside [0,1]");
            return Value::of(v, 1);
        }
    } catch (const InputError& e) {
        throw InputError(e.code(), where + ": " + e.message());
    }
    throw InputError(ErrorCode::MalformedRational, where + ": expected a \"p/q\" string");
}

inline const json& member(const json& doc, const char* key, const std::string& where) {
    if (!doc.is_object() || !doc.contains(key))
        throw InputError(ErrorCode::MalformedDocument, where + ": missing \"" + key + "\"");
    return doc.at(key);
}

inline std::vector<std::vector<Value>> json_matrix(const json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(ErrorCode::MalformedDocument, where + ": expected an array of rows");
    std::vector<std::vector<Value>> out;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const std::string row_at = where + "[" + std::to_string(r) + "]";
        if (!j[r].is_array()) throw InputError(ErrorCode::MalformedDocument, row_at + ": expected an array");
        std::vector<Value> row;
        for (std::size_t c = 0; c < j[r].size(); ++c)
            row.push_back(json_value(j[r][c], row_at + "[" + std::to_string(c) + "]"));
        out.push_back(std::move(row));
    }
    return out;
}

inline FinPoset json_poset(const json& j, const std::string& where) {
    const auto m = json_matrix(j, where);
    std::vector<std::vector<bool>> leq(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (m[r].size() != m.size()) throw InputError(ErrorCode::ShapeMismatch, where + ": order matrix is not square");
        for (std::size_t c = 0; c < m[r].size(); ++c) {
            if (!m[r][c].is_zero() && !m[r][c].is_one())
                throw InputError(ErrorCode::NotAPoset, where + "[" + std::to_string(r) + "][" + std::to_string(c) +
                                                           "]: order entries are 0 or 1");
            leq[r].push_back(m[r][c].is_one());
        }
    }
    try {
        return FinPoset::from_matrix(leq);
    } catch (const InputError& e) {
        throw InputError(e.code(), where + ": " + e.message());
    }
}

inline TNormSpec json_tensor(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return TNormSpec::parse(j.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(e.code(), where + ": " + e.message());
        }
    }
    if (j.is_object() && j.contains("ordinal") && j.at("ordinal").is_array()) {
        std::vector<TNormSpec::Segment> segs;
        std::size_t i = 0;
        for (const auto& s : j.at("ordinal")) {
            const std::string at = where + ".ordinal[" + std::to_string(i++) + "]";
            segs.push_back(TNormSpec::segment(json_value(member(s, "a", at), at + ".a"),
                                              json_value(member(s, "b", at), at + ".b"),
                                              json_tensor(member(s, "inner", at), at + ".inner")));
        }
        try {
            return TNormSpec::ordinal_sum(std::move(segs));
        } catch (const InputError& e) {
            throw InputError(e.code(), where + ": " + e.message());
        }
    }
    throw InputError(ErrorCode::MalformedTNorm, where + ": expected a t-norm name or {\"ordinal\": [...]}");
}

} // namespace detail

/// Parses and validates an instance document. Every rejection is an InputError.
inline InstanceDoc parse_instance(std::string_view text) {
    using detail::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(ErrorCode::MalformedDocument, std::string("syntax: ") + e.what());
    }
    if (!doc.is_object()) throw InputError(ErrorCode::MalformedDocument, "$: expected an object");
    InstanceDoc out;
    const auto& kind = detail::member(doc, "kind", "$");
    const std::string k = kind.is_string() ? kind.get<std::string>() : "";
    if (k == "poset")
        out.kind = InstanceKind::Poset;
    else if (k == "vcategory")
        out.kind = InstanceKind::VCategory;
    else if (k == "distributor")
        out.kind = InstanceKind::Distributor;
    else if (k == "generators")
        out.kind = InstanceKind::Generators;
    else
        throw InputError(ErrorCode::MalformedDocument, "$.kind: unknown kind \"" + kind.dump() + "\"");

    if (doc.contains("tensor")) out.tensor = detail::json_tensor(doc.at("tensor"), "$.tensor");
    const Quantale q(out.tensor);
    if (doc.contains("grid")) {
        const auto& g = doc.at("grid");
        if (!g.is_number_integer() || g.get<std::int64_t>() < 1)
            throw InputError(ErrorCode::OutOfRange, "$.grid: expected a positive integer");
        out.grid = g.get<std::int64_t>();
        try {
            require_grid_closed(q, *out.grid);
        } catch (const InputError& e) {
            throw InputError(e.code(), std::string("$.grid: ") + e.message());
        }
    }

    switch (out.kind) {
    case InstanceKind::Poset: out.poset = detail::json_poset(detail::member(doc, "leq", "$"), "$.leq"); break;
    case InstanceKind::VCategory: {
        VCategory x{q, detail::json_matrix(detail::member(doc, "matrix", "$"), "$.matrix"), {}};
        for (const auto& row : x.a)
            if (row.size() != x.size()) throw InputError(ErrorCode::ShapeMismatch, "$.matrix: not square");
        if (doc.contains("labels")) {
            const auto& l = doc.at("labels");
            if (!l.is_array() || l.size() != x.size())
                throw InputError(ErrorCode::ShapeMismatch, "$.labels: need one label per point");
            for (const auto& s : l) x.labels.push_back(s.is_string() ? s.get<std::string>() : s.dump());
        }
        const Report v = validate_vcategory(x);
        if (!v.ok())
            throw InputError(ErrorCode::NotAVCategory, "$.matrix: not a [0,1]-category, " + v.witnesses.front().check + " " +
                                                       v.witnesses.front().detail);
        out.category = std::move(x);
        break;
    }
    case InstanceKind::Distributor: {
        out.poset = detail::json_poset(detail::member(doc, "source", "$"), "$.source");
        out.target = detail::json_poset(detail::member(doc, "target", "$"), "$.target");
        const auto m = detail::json_matrix(detail::member(doc, "matrix", "$"), "$.matrix");
        if (m.size() != out.poset->size()) throw InputError(ErrorCode::ShapeMismatch, "$.matrix: one row per source point");
        const VRelation r = VRelation::from(m, out.target->size());
        if (!is_distributor(r, from_poset(*out.poset, q), from_poset(*out.target, q)))
            throw InputError(ErrorCode::NotMonotone, "$.matrix: not a distributor between the two orders");
        out.relation = r;
        break;
    }
    case InstanceKind::Generators: {
        out.poset = detail::json_poset(detail::member(doc, "leq", "$"), "$.leq");
        out.generators = detail::json_matrix(detail::member(doc, "generators", "$"), "$.generators");
        for (std::size_t i = 0; i < out.generators.size(); ++i)
            if (out.generators[i].size() != out.poset->size())
                throw InputError(ErrorCode::ShapeMismatch, "$.generators[" + std::to_string(i) + "]: one value per point");
        break;
    }
    }
    return out;
}

} // namespace qcat
