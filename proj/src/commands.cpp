#include <algorithm>
#include <string>

#include "singideal/catalog.hpp"
#include "singideal/cli.hpp"
#include "singideal/random.hpp"

namespace singideal {

namespace {

struct Input {
    FiniteGroup group;
    ParsedFamily family;
};

Input load_input(const RunConfig& config) {
    FiniteGroup g = parse_group_spec(load_json_argument(config.group_spec), config.order_cap);
    ParsedFamily f = parse_family_spec(g, load_json_argument(config.family_spec), config.auto_close);
    return {std::move(g), std::move(f)};
}

json describe(const Input& in) {
    return {{"group", {{"name", in.group.name()}, {"order", in.group.order()}}},
            {"family", to_json(in.family.family)},
            {"auto_closed", in.family.auto_closed}};
}

std::vector<std::vector<std::size_t>> unit_subsets(const RunConfig& config, std::size_t unit_count) {
    std::vector<std::vector<std::size_t>> out;
    if (!config.subsets.empty()) {
        const json j = load_json_argument(config.subsets);
        if (!j.is_array()) throw Error(ErrorCode::parse_error, "--subsets must be an array of unit lists");
        for (const auto& s : j) {
            if (!s.is_array()) throw Error(ErrorCode::parse_error, "--subsets must be an array of unit lists");
            std::vector<std::size_t> units;
            for (const auto& u : s) {
                if (!u.is_number_unsigned()) throw Error(ErrorCode::parse_error, "unit indices must be non-negative");
                units.push_back(u.get<std::size_t>());
            }
            out.push_back(std::move(units));
        }
        return out;
    }
    for (std::size_t u = 0; u < unit_count; ++u) out.push_back({u});
    for (std::size_t u = 0; u < unit_count; ++u) {
        for (std::size_t v = u + 1; v < unit_count; ++v) out.push_back({u, v});
    }
    return out;
}

}  // namespace

void validate(const RunConfig& config) {
    if (config.depth < 1) throw Error(ErrorCode::invalid_argument, "--depth must be at least 1");
    if (config.trials < 1) throw Error(ErrorCode::invalid_argument, "--trials must be at least 1");
    if (!(config.tol > 0.0)) throw Error(ErrorCode::invalid_argument, "--tol must be positive");
}

CommandResult cmd_analyze(const RunConfig& config) {
    const Input in = load_input(config);
    IdealReport report = class_I_check(in.group, in.family.family);

    // Independent oracle: the kernel of the q-map into the coset groupoid.
    const CosetGroupoid cg = build_coset_groupoid(in.group, in.family.family);
    const auto q = q_kernel(cg);
    report.cross_checks.q_kernel_dim = q.size();
    const auto algebraic = algebraic_ideal_kernel(in.group, in.family.family);
    if (!same_subspace(q, algebraic, in.group.order())) {
        throw Error(ErrorCode::internal_inconsistency, "q-map kernel differs from the coset-constraint kernel");
    }

    json out = to_json(report);
    out.update(describe(in));
    return {out, exit_ok};
}

CommandResult cmd_ai_atlas(const RunConfig& config) {
    if (config.max_order > 64) throw Error(ErrorCode::invalid_argument, "--max-order is limited to 64");
    const auto types = abelian_types(config.max_order);

    struct Row {
        std::size_t minimal = 0;
        std::size_t kernel_dim = 0;
        bool span = false;
        bool criterion = false;
    };
    std::vector<Row> rows(types.size());
    std::vector<std::string> failures(types.size());
    const auto n = static_cast<std::ptrdiff_t>(types.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        // exceptions must not escape the parallel region
        try {
            const FiniteGroup g = build_abelian(types[k]);
            const IdealReport r = property_AI(g);
            rows[k] = {minimal_subgroups(g).size(), r.algebraic_kernel_dim, *r.ai_verdict, abelian_AI_criterion(g)};
        } catch (const std::exception& e) {
            failures[k] = e.what();
        }
    }
    for (std::size_t k = 0; k < types.size(); ++k) {
        if (!failures[k].empty()) {
            throw Error(ErrorCode::internal_inconsistency, types[k].name() + ": " + failures[k]);
        }
    }

    json table = json::array();
    std::size_t disagreements = 0;
    for (std::size_t k = 0; k < types.size(); ++k) {
        const bool agree = rows[k].span == rows[k].criterion;
        if (!agree) ++disagreements;
        table.push_back({{"group", types[k].name()},
                         {"order", types[k].order()},
                         {"factors", types[k].factors},
                         {"minimal_subgroups", rows[k].minimal},
                         {"algebraic_kernel_dim", rows[k].kernel_dim},
                         {"ai_span", rows[k].span},
                         {"ai_criterion", rows[k].criterion},
                         {"agree", agree}});
    }
    return {{{"max_order", config.max_order}, {"rows", table}, {"disagreements", disagreements}}, exit_ok};
}

CommandResult cmd_hls(const RunConfig& config) {
    const Input in = load_input(config);
    const TruncatedHLS hls = build_hls(in.group, in.family.family, config.depth);

    json out = describe(in);
    out["depth"] = config.depth;
    out["units"] = hls.unit_count();
    out["extremely_dangerous"] = is_extremely_dangerous(hls);
    out["essential_fiber"] = to_json(essential_fiber(hls));

    const auto witness = integer_witness(in.group, in.family.family);
    out["witness_lifted"] = witness.has_value();
    if (witness) {
        const std::size_t cutoff = 1;
        const SingularCandidate f = singular_function_from_witness(hls, *witness, cutoff);
        out["witness"] = to_json(*witness);
        out["cutoff"] = cutoff;
        out["verify_singular"] = verify_singular(hls, f);
    } else {
        out["witness"] = nullptr;
        out["verify_singular"] = nullptr;
    }
    return {out, exit_ok};
}

CommandResult cmd_normcheck(const RunConfig& config) {
    const Input in = load_input(config);
    const CosetGroupoid cg = build_coset_groupoid(in.group, in.family.family);
    const FiniteGroupoid& g = cg.groupoid;
    const auto subsets = unit_subsets(config, g.unit_count());

    for (const auto& units : subsets) {
        if (units.empty()) throw Error(ErrorCode::empty_unit_set, "unit subsets must be non-empty");
        for (std::size_t u : units) {
            if (u >= g.unit_count()) throw Error(ErrorCode::unit_not_found, "unit " + std::to_string(u));
        }
    }

    RationalSampler rng(config.seed);
    json per_subset = json::array();
    double worst = 0.0;
    for (const auto& units : subsets) {
        std::vector<GroupoidFunction> samples;
        for (std::size_t t = 0; t < config.trials; ++t) samples.push_back(random_function(g, rng));
        std::vector<double> residuals(samples.size());
        const auto n = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t t = 0; t < n; ++t) {
            const auto k = static_cast<std::size_t>(t);
            residuals[k] = verify_norm_equation(g, units, samples[k], default_power_tol).residual;
        }
        const double max_residual = *std::max_element(residuals.begin(), residuals.end());
        worst = std::max(worst, max_residual);
        per_subset.push_back({{"units", units}, {"max_residual", max_residual}});
    }

    json out = describe(in);
    out["groupoid"] = {{"units", g.unit_count()}, {"arrows", g.arrow_count()}};
    out["trials"] = config.trials;
    out["seed"] = std::to_string(config.seed);
    out["tol"] = config.tol;
    out["subsets"] = per_subset;
    out["max_residual"] = worst;
    out["passed"] = worst < config.tol;
    return {out, worst < config.tol ? exit_ok : exit_tolerance};
}

CommandResult cmd_witness(const RunConfig& config) {
    const Input in = load_input(config);
    const auto witness = integer_witness(in.group, in.family.family);
    return {{{"witness", witness ? to_json(*witness) : json(nullptr)}}, exit_ok};
}

int exit_code_for(ErrorCode code) noexcept {
    return code == ErrorCode::internal_inconsistency ? exit_inconsistency : exit_parse_error;
}

CommandResult run(const RunConfig& config) {
    try {
        validate(config);
        switch (config.command) {
            case Command::analyze: return cmd_analyze(config);
            case Command::ai_atlas: return cmd_ai_atlas(config);
            case Command::hls: return cmd_hls(config);
            case Command::normcheck: return cmd_normcheck(config);
            case Command::witness: return cmd_witness(config);
        }
    } catch (const Error& e) {
        return {{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}, exit_code_for(e.code())};
    } catch (const std::exception& e) {
        return {{{"error", "failure"}, {"message", e.what()}}, exit_parse_error};
    }
    return {{{"error", "unknown-command"}}, exit_parse_error};
}

}  // namespace singideal
