#include "singideal/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "singideal/error.hpp"

namespace singideal {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

std::size_t positive_field(const json& spec, const char* key) {
    if (!spec.contains(key) || !spec[key].is_number_integer() || spec[key].get<long long>() < 1) {
        parse_fail(std::string("field '") + key + "' must be a positive integer");
    }
    return spec[key].get<std::size_t>();
}

std::vector<Element> element_list(const json& j) {
    if (!j.is_array()) parse_fail("expected an array of element indices");
    std::vector<Element> out;
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<long long>() < 0) parse_fail("element indices must be non-negative integers");
        out.push_back(e.get<Element>());
    }
    return out;
}

}  // namespace

json load_json_argument(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    try {
        if (first != std::string_view::npos && (text[first] == '{' || text[first] == '[')) {
            return json::parse(text);
        }
        std::ifstream in{std::string(text)};
        if (!in) parse_fail("cannot open '" + std::string(text) + "'");
        return json::parse(in);
    } catch (const json::exception& e) {
        parse_fail(e.what());
    }
}

FiniteGroup parse_group_spec(const json& spec, std::size_t order_cap) {
    if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string()) {
        parse_fail("group spec needs a string field 'kind'");
    }
    const std::string kind = spec["kind"];
    if (kind == "cyclic") return cyclic(positive_field(spec, "n"), order_cap);
    if (kind == "symmetric") return symmetric(positive_field(spec, "n"), order_cap);
    if (kind == "dihedral") return dihedral(positive_field(spec, "n"), order_cap);
    if (kind == "quaternion8") return quaternion8();
    if (kind == "product") {
        if (!spec.contains("factors") || !spec["factors"].is_array()) parse_fail("product needs 'factors'");
        std::vector<FiniteGroup> factors;
        for (const auto& f : spec["factors"]) factors.push_back(parse_group_spec(f, order_cap));
        return direct_product(factors, order_cap);
    }
    if (kind == "cayley") {
        if (!spec.contains("table") || !spec["table"].is_array()) parse_fail("cayley needs 'table'");
        std::vector<std::vector<Element>> table;
        for (const auto& row : spec["table"]) table.push_back(element_list(row));
        auto g = FiniteGroup::from_table(std::move(table), order_cap);
        g.set_name("cayley" + std::to_string(g.order()));
        return g;
    }
    parse_fail("unknown group kind '" + kind + "'");
}

ParsedFamily parse_family_spec(const FiniteGroup& g, const json& spec, bool auto_close) {
    if (!spec.is_object()) parse_fail("family spec must be an object");
    if (spec.contains("minimal")) {
        if (!spec["minimal"].is_boolean() || !spec["minimal"].get<bool>()) parse_fail("'minimal' must be true");
        return {minimal_subgroups(g), false};
    }
    if (spec.contains("conjugacy_class_of")) {
        const auto gens = element_list(spec["conjugacy_class_of"]);
        const Subgroup seed[] = {subgroup_generated(g, gens)};
        return {conjugation_closure(g, seed), false};
    }
    if (spec.contains("subgroups")) {
        if (!spec["subgroups"].is_array()) parse_fail("'subgroups' must be an array");
        std::vector<Subgroup> members;
        for (const auto& s : spec["subgroups"]) members.push_back(make_subgroup(g, element_list(s)));
        SubgroupFamily family(members);
        if (family.is_conjugation_invariant(g)) return {std::move(family), false};
        if (!auto_close) throw Error(ErrorCode::not_invariant, "family is not closed under conjugation");
        std::cerr << "warning: family is not conjugation-invariant; using its conjugation closure\n";
        return {conjugation_closure(g, members), true};
    }
    parse_fail("family spec needs 'subgroups', 'minimal' or 'conjugacy_class_of'");
}

json to_json(const Subgroup& x) { return json(x.elements); }

json to_json(const SubgroupFamily& family) {
    json out = json::array();
    for (const auto& x : family) out.push_back(to_json(x));
    return out;
}

json to_json(std::span<const Integer> coeffs) {
    json out = json::array();
    for (const auto& c : coeffs) out.push_back(c.get_str());
    return out;
}

json to_json(const IdealReport& r) {
    json checks = {
        {"kernels_equal", r.cross_checks.kernels_equal},
        {"span_duality", r.cross_checks.span_duality},
        {"witness_valid", r.cross_checks.witness_valid ? json(*r.cross_checks.witness_valid) : json(nullptr)},
        {"q_kernel_dim", r.cross_checks.q_kernel_dim ? json(*r.cross_checks.q_kernel_dim) : json(nullptr)},
    };
    return {
        {"algebraic_kernel_dim", r.algebraic_kernel_dim},
        {"full_kernel_dim", r.full_kernel_dim},
        {"witness", r.witness ? json{{"coeffs", to_json(*r.witness)}} : json(nullptr)},
        {"weak_containment", r.weak_containment},
        {"in_class_I", r.in_class_I},
        {"ai_verdict", r.ai_verdict ? json(*r.ai_verdict) : json(nullptr)},
        {"cross_checks", checks},
    };
}

IdealReport report_from_json(const json& j) {
    try {
        IdealReport r;
        r.algebraic_kernel_dim = j.at("algebraic_kernel_dim").get<std::size_t>();
        r.full_kernel_dim = j.at("full_kernel_dim").get<std::size_t>();
        if (!j.at("witness").is_null()) {
            IntegerVector w;
            for (const auto& c : j.at("witness").at("coeffs")) w.emplace_back(c.get<std::string>());
            r.witness = std::move(w);
        }
        r.weak_containment = j.at("weak_containment").get<bool>();
        r.in_class_I = j.at("in_class_I").get<bool>();
        if (!j.at("ai_verdict").is_null()) r.ai_verdict = j.at("ai_verdict").get<bool>();
        const json& c = j.at("cross_checks");
        r.cross_checks.kernels_equal = c.at("kernels_equal").get<bool>();
        r.cross_checks.span_duality = c.at("span_duality").get<bool>();
        if (!c.at("witness_valid").is_null()) r.cross_checks.witness_valid = c.at("witness_valid").get<bool>();
        if (!c.at("q_kernel_dim").is_null()) r.cross_checks.q_kernel_dim = c.at("q_kernel_dim").get<std::size_t>();
        return r;
    } catch (const json::exception& e) {
        parse_fail(e.what());
    } catch (const std::invalid_argument& e) {
        parse_fail(std::string("bad integer: ") + e.what());
    }
}

json dump_groupoid(const CosetGroupoid& cg) {
    const FiniteGroupoid& g = cg.groupoid;
    json arrows = json::array();
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
        arrows.push_back({{"id", a},
                          {"source", g.source(a)},
                          {"range", g.range(a)},
                          {"inverse", g.inverse(a)},
                          {"elements", cg.cosets[a].elements}});
    }
    json compose = json::array();
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
        for (std::size_t b = 0; b < g.arrow_count(); ++b) {
            const std::size_t ab = g.compose(a, b);
            if (ab != FiniteGroupoid::none) compose.push_back({a, b, ab});
        }
    }
    return {{"units", to_json(cg.family)}, {"arrows", arrows}, {"composition", compose}};
}

std::string serialize(const json& j) { return j.dump(2) + "\n"; }

}  // namespace singideal
