// Command-line front end: parses groupoid / SFT description files and
// renders homology tables, UCT decompositions, exact sequences, and
// convolution products. All mathematics lives in the library.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ghom/input_doc.hpp"
#include "ghom/moore.hpp"
#include "ghom/sequences.hpp"
#include "ghom/sft.hpp"

namespace {

using namespace ghom;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<long> named_unit_set(const InputDocument& doc, const std::string& name) {
    auto it = doc.unit_sets.find(name);
    if (it == doc.unit_sets.end()) throw ParseError("no unit set named '" + name + "' in the document");
    return it->second;
}

std::vector<long> named_arrow_set(const InputDocument& doc, const std::string& name) {
    auto it = doc.arrow_sets.find(name);
    if (it == doc.arrow_sets.end())
        throw ParseError("no arrow set named '" + name + "' in the document");
    return it->second;
}

HomologyResult document_homology(const InputDocument& doc, const CoefficientSpec& coeff,
                                 long max_degree, long budget) {
    switch (doc.kind) {
        case InputDocument::Kind::Sft: {
            HomologyResult integral = sft_homology(doc.sfts[0], max_degree);
            if (coeff.is_integers()) return integral;
            HomologyResult r;
            r.coeff = coeff;
            for (long n = 0; n <= max_degree; ++n)
                r.groups.push_back(uct_homology(integral, coeff, n).middle);
            return r;
        }
        case InputDocument::Kind::SftUnion: {
            HomologyResult integral = sft_disjoint_union(doc.sfts, max_degree);
            if (coeff.is_integers()) return integral;
            HomologyResult r;
            r.coeff = coeff;
            for (long n = 0; n <= max_degree; ++n)
                r.groups.push_back(uct_homology(integral, coeff, n).middle);
            return r;
        }
        case InputDocument::Kind::Groupoid: {
            ValidationReport rep = validate_groupoid(doc.groupoid);
            if (!rep.ok()) throw ValidationError("invalid groupoid:\n" + rep.to_string());
            Nerve nv = build_nerve(doc.groupoid, max_degree + 1, budget);
            ChainComplex c = moore_complex(nv);
            return homology_range(c, coeff, max_degree);
        }
    }
    throw Error("unreachable");
}

void print_homology_table(const HomologyResult& h, bool as_json, const char* label) {
    if (as_json) {
        ordered_json j;
        j["coefficients"] = h.coeff.to_string();
        ordered_json degrees;
        for (long n = 0; n <= h.max_degree(); ++n)
            degrees[std::to_string(n)] = group_to_json(h.groups[static_cast<size_t>(n)]);
        j["degrees"] = degrees;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "coefficients: " << h.coeff.to_string() << "\n";
    std::cout << "degree  " << label << "\n";
    for (long n = 0; n <= h.max_degree(); ++n)
        std::cout << n << "       " << render_group(h.groups[static_cast<size_t>(n)]) << "\n";
}

const char* tag_label(NodeTag t, bool mv) {
    switch (t) {
        case NodeTag::Sub: return mv ? "overlap" : "sub";
        case NodeTag::Mid: return mv ? "pieces" : "whole";
        case NodeTag::Quot: return mv ? "whole" : "quotient";
    }
    return "?";
}

int print_les(const LongExactSequence& les, bool as_json, bool mv) {
    ValidationReport rep = verify_exactness(les);
    if (as_json) {
        ordered_json j;
        ordered_json nodes = ordered_json::array();
        for (const auto& node : les.nodes) {
            if (node.degree < 0) continue;  // terminal zero pad
            ordered_json nj;
            nj["degree"] = node.degree;
            nj["role"] = tag_label(node.tag, mv);
            nj["group"] = group_to_json(node.group);
            nodes.push_back(nj);
        }
        j["nodes"] = nodes;
        j["exact"] = rep.ok();
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& node : les.nodes) {
            if (node.degree < 0) continue;
            std::cout << "H_" << node.degree << "(" << tag_label(node.tag, mv)
                      << ") = " << render_group(node.group) << "\n";
        }
        std::cout << "exact: " << (rep.ok() ? "yes" : "NO") << "\n";
        if (!rep.ok()) std::cout << rep.to_string();
    }
    return rep.ok() ? kExitOk : kExitValidation;
}

std::vector<Int> parse_int_vector(const std::string& text, long expect) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.emplace_back(item);
    if (static_cast<long>(out.size()) != expect)
        throw ParseError("vector has " + std::to_string(out.size()) + " entries, expected " +
                         std::to_string(expect));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact homology of finite and shift-of-finite-type groupoids"};
    app.require_subcommand(1);

    std::string file, coeff_text = "Z", u1_name, u2_name, sub_name, f_text, g_text;
    long max_degree = 2, degree = 0, budget = kDefaultTupleBudget;
    bool as_json = false, support_local = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "input document (JSON)")->required();
        cmd->add_flag("--json", as_json, "machine-readable output");
    };

    CLI::App* validate = app.add_subcommand("validate", "check a document against the axioms");
    add_common(validate);

    CLI::App* homology_cmd = app.add_subcommand("homology", "homology table");
    add_common(homology_cmd);
    homology_cmd->add_option("--max-degree", max_degree, "top degree")->required();
    homology_cmd->add_option("--coefficients", coeff_text, "Z, Z/m, or FG:d1,d2[+rK]");
    homology_cmd->add_option("--tuple-budget", budget, "nerve level size guard");

    CLI::App* cohomology_cmd = app.add_subcommand("cohomology", "cohomology table");
    add_common(cohomology_cmd);
    cohomology_cmd->add_option("--max-degree", max_degree, "top degree")->required();
    cohomology_cmd->add_option("--coefficients", coeff_text, "Z, Z/m, or FG:d1,d2[+rK]");
    cohomology_cmd->add_option("--tuple-budget", budget, "nerve level size guard");

    CLI::App* uct_cmd = app.add_subcommand("uct", "universal-coefficient decomposition");
    add_common(uct_cmd);
    uct_cmd->add_option("--degree", degree, "degree n")->required();
    uct_cmd->add_option("--coefficients", coeff_text, "Z, Z/m, or FG:d1,d2[+rK]")->required();
    uct_cmd->add_option("--tuple-budget", budget, "nerve level size guard");

    CLI::App* mv_cmd = app.add_subcommand("mayer-vietoris", "Mayer-Vietoris long exact sequence");
    add_common(mv_cmd);
    mv_cmd->add_option("--u1", u1_name, "name of the first unit set")->required();
    mv_cmd->add_option("--u2", u2_name, "name of the second unit set")->required();
    mv_cmd->add_option("--max-degree", max_degree, "top degree")->required();
    mv_cmd->add_flag("--support-local", support_local, "drop the saturation requirement");

    CLI::App* sub_cmd = app.add_subcommand("subgroupoid-les", "subgroupoid long exact sequence");
    add_common(sub_cmd);
    sub_cmd->add_option("--sub", sub_name, "name of the wide subgroupoid arrow set")->required();
    sub_cmd->add_option("--max-degree", max_degree, "top degree")->required();

    CLI::App* conv_cmd = app.add_subcommand("convolve", "convolution product of two functions");
    add_common(conv_cmd);
    conv_cmd->add_option("--f", f_text, "comma-separated values of the first function")->required();
    conv_cmd->add_option("--g", g_text, "comma-separated values of the second function")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    InputDocument doc = parse_document(read_file(file));
    CoefficientSpec coeff = parse_coefficients(coeff_text);

    if (validate->parsed()) {
        if (doc.kind == InputDocument::Kind::Groupoid) {
            ValidationReport rep = validate_groupoid(doc.groupoid);
            if (!rep.ok()) {
                std::cout << rep.to_string();
                return kExitValidation;
            }
            std::cout << "ok: groupoid with " << doc.groupoid.arrow_count << " arrows, "
                      << doc.groupoid.units.size() << " units\n";
        } else {
            for (const SftSpec& s : doc.sfts) validate_sft(s);
            std::cout << "ok: " << doc.sfts.size() << " adjacency matrix(es)\n";
        }
        return kExitOk;
    }

    if (homology_cmd->parsed()) {
        print_homology_table(document_homology(doc, coeff, max_degree, budget), as_json, "H_n");
        return kExitOk;
    }

    if (cohomology_cmd->parsed()) {
        HomologyResult h;
        h.coeff = coeff;
        if (doc.kind == InputDocument::Kind::Groupoid) {
            ValidationReport rep = validate_groupoid(doc.groupoid);
            if (!rep.ok()) throw ValidationError("invalid groupoid:\n" + rep.to_string());
            Nerve nv = build_nerve(doc.groupoid, max_degree + 1, budget);
            DualComplex d = dual_cochain_complex(moore_complex(nv), coeff);
            for (long n = 0; n <= max_degree; ++n) h.groups.push_back(cohomology(d, n));
        } else {
            HomologyResult integral = doc.kind == InputDocument::Kind::Sft
                                          ? sft_homology(doc.sfts[0], max_degree)
                                          : sft_disjoint_union(doc.sfts, max_degree);
            for (long n = 0; n <= max_degree; ++n)
                h.groups.push_back(uct_cohomology(integral, coeff, n).middle);
        }
        print_homology_table(h, as_json, "H^n");
        return kExitOk;
    }

    if (uct_cmd->parsed()) {
        HomologyResult integral;
        if (doc.kind == InputDocument::Kind::Groupoid) {
            ValidationReport rep = validate_groupoid(doc.groupoid);
            if (!rep.ok()) throw ValidationError("invalid groupoid:\n" + rep.to_string());
            Nerve nv = build_nerve(doc.groupoid, degree + 1, budget);
            integral = homology_range(moore_complex(nv), CoefficientSpec::integers(), degree);
        } else if (doc.kind == InputDocument::Kind::Sft) {
            integral = sft_homology(doc.sfts[0], degree);
        } else {
            integral = sft_disjoint_union(doc.sfts, degree);
        }
        UctSequence u = uct_homology(integral, coeff, degree);
        if (as_json) {
            ordered_json j;
            j["degree"] = u.degree;
            j["left"] = group_to_json(u.left);
            j["middle"] = group_to_json(u.middle);
            j["right"] = group_to_json(u.right);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "0 -> H_" << degree << " (x) A = " << render_group(u.left) << " -> H_"
                      << degree << "(G; A) = " << render_group(u.middle) << " -> Tor(H_"
                      << (degree - 1) << ", A) = " << render_group(u.right) << " -> 0\n";
        }
        return kExitOk;
    }

    if (mv_cmd->parsed() || sub_cmd->parsed()) {
        if (doc.kind != InputDocument::Kind::Groupoid)
            throw ValidationError("this subcommand needs a finite groupoid document");
        ValidationReport rep = validate_groupoid(doc.groupoid);
        if (!rep.ok()) throw ValidationError("invalid groupoid:\n" + rep.to_string());
        if (mv_cmd->parsed()) {
            MvCover cover{doc.groupoid, named_unit_set(doc, u1_name), named_unit_set(doc, u2_name)};
            return print_les(mv_les(cover, max_degree, support_local), as_json, true);
        }
        ChainSES ses = subgroupoid_ses(doc.groupoid, named_arrow_set(doc, sub_name), max_degree);
        return print_les(snake_les(ses, max_degree), as_json, false);
    }

    if (conv_cmd->parsed()) {
        if (doc.kind != InputDocument::Kind::Groupoid)
            throw ValidationError("convolve needs a finite groupoid document");
        GroupoidFunction f{doc.groupoid, parse_int_vector(f_text, doc.groupoid.arrow_count)};
        GroupoidFunction g{doc.groupoid, parse_int_vector(g_text, doc.groupoid.arrow_count)};
        GroupoidFunction out = convolve(doc.groupoid, f, g);
        if (as_json) {
            ordered_json j = ordered_json::array();
            for (const Int& v : out.values) j.push_back(v.get_str());
            std::cout << j.dump() << "\n";
        } else {
            for (size_t i = 0; i < out.values.size(); ++i)
                std::cout << (i ? "," : "") << out.values[i].get_str();
            std::cout << "\n";
        }
        return kExitOk;
    }

    return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
