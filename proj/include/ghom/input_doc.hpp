#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghom/coefficients.hpp"
#include "ghom/groupoid.hpp"
#include "ghom/sft.hpp"

namespace ghom {

// Parsed input file: either a finite groupoid (possibly assembled from
// standard constructors and disjoint unions) or one-or-more SFT adjacency
// matrices. Named unit subsets serve covers and reductions; named arrow
// subsets serve wide subgroupoids.
struct InputDocument {
    enum class Kind { Groupoid, Sft, SftUnion };
    Kind kind = Kind::Groupoid;
    FiniteGroupoid groupoid;
    std::vector<SftSpec> sfts;
    std::map<std::string, std::vector<long>> unit_sets;   // unit positions
    std::map<std::string, std::vector<long>> arrow_sets;  // arrow indices
};

InputDocument parse_document(const std::string& text);
InputDocument parse_document_json(const nlohmann::json& j);

nlohmann::ordered_json groupoid_to_json(const FiniteGroupoid& g);
FiniteGroupoid groupoid_from_json(const nlohmann::json& j);

// "Z", "Z/6", "FG:2,4", "FG:2,4+r1".
CoefficientSpec parse_coefficients(const std::string& text);

std::string render_group(const FgAbGroup& g);
nlohmann::ordered_json group_to_json(const FgAbGroup& g);

}  // namespace ghom
