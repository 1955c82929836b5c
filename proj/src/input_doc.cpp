#include "ghom/input_doc.hpp"

#include <sstream>

namespace ghom {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::vector<long> long_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + ": expected an array");
    std::vector<long> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError(what + ": expected integers");
        out.push_back(v.get<long>());
    }
    return out;
}

std::vector<std::vector<long>> table(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + ": expected an array of arrays");
    std::vector<std::vector<long>> out;
    for (const auto& row : j) out.push_back(long_list(row, what));
    return out;
}

IntMatrix int_matrix(const json& j, const std::string& what) {
    auto rows = table(j, what);
    long r = static_cast<long>(rows.size());
    long c = rows.empty() ? 0 : static_cast<long>(rows[0].size());
    for (const auto& row : rows)
        if (static_cast<long>(row.size()) != c) throw ParseError(what + ": ragged matrix");
    IntMatrix m(r, c);
    for (long i = 0; i < r; ++i)
        for (long k = 0; k < c; ++k) m.at(i, k) = rows[static_cast<size_t>(i)][static_cast<size_t>(k)];
    return m;
}

void parse_named_sets(const json& j, InputDocument& doc) {
    if (j.contains("unit_sets")) {
        if (!j["unit_sets"].is_object()) throw ParseError("unit_sets: expected an object");
        for (auto it = j["unit_sets"].begin(); it != j["unit_sets"].end(); ++it)
            doc.unit_sets[it.key()] = long_list(it.value(), "unit_sets." + it.key());
    }
    if (j.contains("arrow_sets")) {
        if (!j["arrow_sets"].is_object()) throw ParseError("arrow_sets: expected an object");
        for (auto it = j["arrow_sets"].begin(); it != j["arrow_sets"].end(); ++it)
            doc.arrow_sets[it.key()] = long_list(it.value(), "arrow_sets." + it.key());
    }
}

}  // namespace

FiniteGroupoid groupoid_from_json(const json& j) {
    FiniteGroupoid g;
    if (!j.contains("arrows")) throw ParseError("finite_groupoid: missing 'arrows'");
    g.arrow_count = j["arrows"].get<long>();
    g.units = long_list(j.at("units"), "units");
    g.source = long_list(j.at("source"), "source");
    g.range = long_list(j.at("range"), "range");
    g.inverse = long_list(j.at("inverse"), "inverse");
    for (const auto& e : j.at("compose")) {
        auto t = long_list(e, "compose");
        if (t.size() != 3) throw ParseError("compose: entries must be [a, b, ab]");
        g.compose.push_back({t[0], t[1], t[2]});
    }
    g.sort_compose_table();
    return g;
}

ordered_json groupoid_to_json(const FiniteGroupoid& g) {
    ordered_json j;
    j["kind"] = "finite_groupoid";
    j["arrows"] = g.arrow_count;
    j["units"] = g.units;
    j["source"] = g.source;
    j["range"] = g.range;
    j["inverse"] = g.inverse;
    ordered_json comp = ordered_json::array();
    for (const auto& e : g.compose) comp.push_back({e[0], e[1], e[2]});
    j["compose"] = comp;
    return j;
}

InputDocument parse_document_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("document: missing 'kind'");
    std::string kind = j["kind"].get<std::string>();
    InputDocument doc;

    if (kind == "finite_groupoid") {
        doc.kind = InputDocument::Kind::Groupoid;
        doc.groupoid = groupoid_from_json(j);
    } else if (kind == "pair") {
        doc.kind = InputDocument::Kind::Groupoid;
        doc.groupoid = pair_groupoid(j.at("points").get<long>());
    } else if (kind == "units") {
        doc.kind = InputDocument::Kind::Groupoid;
        doc.groupoid = unit_groupoid(j.at("points").get<long>());
    } else if (kind == "group") {
        doc.kind = InputDocument::Kind::Groupoid;
        doc.groupoid = group_groupoid(table(j.at("table"), "table"));
    } else if (kind == "transformation") {
        doc.kind = InputDocument::Kind::Groupoid;
        doc.groupoid = transformation_groupoid(table(j.at("group_table"), "group_table"),
                                               table(j.at("action"), "action"));
    } else if (kind == "equivalence_relation") {
        doc.kind = InputDocument::Kind::Groupoid;
        doc.groupoid =
            equivalence_relation_groupoid(j.at("points").get<long>(), table(j.at("partition"), "partition"));
    } else if (kind == "group_bundle") {
        doc.kind = InputDocument::Kind::Groupoid;
        std::vector<std::vector<std::vector<long>>> tables;
        for (const auto& t : j.at("tables")) tables.push_back(table(t, "tables"));
        doc.groupoid = group_bundle_groupoid(tables);
    } else if (kind == "sft") {
        doc.kind = InputDocument::Kind::Sft;
        doc.sfts.push_back({int_matrix(j.at("matrix"), "matrix")});
    } else if (kind == "disjoint_union") {
        if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty())
            throw ParseError("disjoint_union: missing nonempty 'parts'");
        std::vector<InputDocument> parts;
        for (const auto& p : j["parts"]) parts.push_back(parse_document_json(p));
        bool all_sft = true, all_groupoid = true;
        for (const auto& p : parts) {
            if (p.kind == InputDocument::Kind::Groupoid)
                all_sft = false;
            else
                all_groupoid = false;
        }
        if (all_sft) {
            doc.kind = InputDocument::Kind::SftUnion;
            for (const auto& p : parts)
                doc.sfts.insert(doc.sfts.end(), p.sfts.begin(), p.sfts.end());
        } else if (all_groupoid) {
            doc.kind = InputDocument::Kind::Groupoid;
            std::vector<FiniteGroupoid> gs;
            for (const auto& p : parts) gs.push_back(p.groupoid);
            doc.groupoid = disjoint_union(gs);
        } else {
            throw ParseError("disjoint_union: parts mix groupoid and sft kinds");
        }
    } else {
        throw ParseError("document: unknown kind '" + kind + "'");
    }

    parse_named_sets(j, doc);
    return doc;
}

InputDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    return parse_document_json(j);
}

CoefficientSpec parse_coefficients(const std::string& text) {
    if (text == "Z") return CoefficientSpec::integers();
    if (text.rfind("Z/", 0) == 0) {
        try {
            Int m(text.substr(2));
            return CoefficientSpec::mod(m);
        } catch (const std::invalid_argument&) {
            throw ParseError("coefficients: bad modulus in '" + text + "'");
        }
    }
    if (text.rfind("FG:", 0) == 0) {
        std::string body = text.substr(3);
        long free_rank = 0;
        auto plus = body.find("+r");
        if (plus != std::string::npos) {
            try {
                free_rank = std::stol(body.substr(plus + 2));
            } catch (...) {
                throw ParseError("coefficients: bad free rank in '" + text + "'");
            }
            body = body.substr(0, plus);
        }
        std::vector<Int> factors;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            try {
                factors.emplace_back(item);
            } catch (const std::invalid_argument&) {
                throw ParseError("coefficients: bad factor '" + item + "'");
            }
        }
        for (const Int& f : factors)
            if (f < 2) throw ParseError("coefficients: factors must be >= 2");
        return CoefficientSpec::group(FgAbGroup::canonical(free_rank, factors));
    }
    throw ParseError("coefficients: expected Z, Z/m, or FG:d1,d2[+rK], got '" + text + "'");
}

std::string render_group(const FgAbGroup& g) { return g.to_string(); }

ordered_json group_to_json(const FgAbGroup& g) {
    ordered_json j;
    j["free_rank"] = g.free_rank;
    ordered_json t = ordered_json::array();
    for (const Int& d : g.torsion) t.push_back(d.get_str());
    j["torsion"] = t;
    return j;
}

}  // namespace ghom
