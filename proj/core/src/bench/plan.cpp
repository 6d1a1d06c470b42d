#include "triset/bench/plan.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "triset/error.hpp"
#include "triset/problems.hpp"

namespace triset::bench {

namespace {

using nlohmann::json;

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

template <typename T>
std::vector<T> list_of(const json& value, const char* key) {
    if (!value.is_array()) throw PlanError(std::string("plan: '") + key + "' must be an array");
    try {
        return value.get<std::vector<T>>();
    } catch (const json::exception& e) {
        throw PlanError(std::string("plan: bad '") + key + "': " + e.what());
    }
}

}  // namespace

std::vector<std::size_t> default_sizes(int m) {
    switch (m) {
        case 3: return {15, 91, 990, 5050};
        case 5: return {15, 210, 1001, 5985};
        default:
            throw PlanError("no default population/archive sizes for m=" + std::to_string(m) +
                            "; list them explicitly");
    }
}

std::uint64_t default_budget(int m) { return m == 3 ? 50'000 : 200'000; }

std::vector<std::uint64_t> default_seeds() {
    std::vector<std::uint64_t> seeds(51);
    std::iota(seeds.begin(), seeds.end(), std::uint64_t{1});
    return seeds;
}

std::vector<std::size_t> populations_for(const ExperimentPlan& plan, int m) {
    return sorted_unique(plan.populations.empty() ? default_sizes(m) : plan.populations);
}

std::vector<std::size_t> archives_for(const ExperimentPlan& plan, int m) {
    return sorted_unique(plan.archives.empty() ? default_sizes(m) : plan.archives);
}

std::uint64_t budget_for(const ExperimentPlan& plan, int m, std::size_t population) {
    const auto it = plan.budgets.find(m);
    const std::uint64_t full = it == plan.budgets.end() ? default_budget(m) : it->second;
    const auto scaled = static_cast<std::uint64_t>(std::llround(static_cast<double>(full) * plan.budget_scale));
    // The initial population alone costs N evaluations.
    return std::max<std::uint64_t>(scaled, population);
}

std::vector<std::uint64_t> seeds_for(const ExperimentPlan& plan) {
    std::vector<std::uint64_t> seeds = plan.seeds;
    if (plan.budget_scale < 1.0 && !seeds.empty()) {
        const auto keep = static_cast<std::size_t>(std::ceil(static_cast<double>(seeds.size()) * plan.budget_scale));
        seeds.resize(std::clamp<std::size_t>(keep, 1, seeds.size()));
    }
    return seeds;
}

bool selects_on(const ExperimentPlan& plan, std::size_t archive, std::size_t k) {
    if (k > archive) return false;
    if (plan.selection_archives.empty()) return true;
    return std::find(plan.selection_archives.begin(), plan.selection_archives.end(), archive) !=
           plan.selection_archives.end();
}

void validate_plan(const ExperimentPlan& plan) {
    if (plan.problems.empty()) throw PlanError("plan lists no problems");
    if (plan.objectives.empty()) throw PlanError("plan lists no objective counts");
    if (plan.algorithms.empty()) throw PlanError("plan lists no algorithms");
    if (plan.seeds.empty()) throw PlanError("plan lists no seeds");
    if (!(plan.budget_scale > 0.0) || !std::isfinite(plan.budget_scale)) {
        throw PlanError("budget scale must be positive");
    }
    if (plan.hv_samples < 1000) throw PlanError("hv_samples must be at least 1000");
    if (!plan.methods.empty() && plan.subset_sizes.empty()) throw PlanError("selection methods given without k");
    for (const auto& name : plan.problems) {
        for (int m : plan.objectives) {
            try {
                make_problem(name, m);
            } catch (const Error& e) {
                throw PlanError(e.what());
            }
        }
    }
    for (int m : plan.objectives) {
        const auto pops = populations_for(plan, m);
        const auto archs = archives_for(plan, m);
        if (pops.empty() || archs.empty()) throw PlanError("plan has no population or archive sizes");
        for (std::size_t n : pops) {
            try {
                lattice_divisions_for_size(m, n);
            } catch (const ParameterError&) {
                throw PlanError("population size " + std::to_string(n) + " is not a lattice size for m=" +
                                std::to_string(m));
            }
        }
        for (std::size_t n : archs) {
            try {
                lattice_divisions_for_size(m, n);
            } catch (const ParameterError&) {
                throw PlanError("archive size " + std::to_string(n) + " is not a lattice size for m=" +
                                std::to_string(m));
            }
        }
        for (std::size_t a : plan.selection_archives) {
            if (std::find(archs.begin(), archs.end(), a) == archs.end()) {
                throw PlanError("selection archive " + std::to_string(a) + " is not among the archive sizes");
            }
        }
        if (plan.methods.empty()) continue;
        for (std::size_t k : plan.subset_sizes) {
            if (k == 0) throw PlanError("subset size k must be at least 1");
            const auto targets = plan.selection_archives.empty() ? archs : plan.selection_archives;
            if (!plan.selection_archives.empty()) {
                for (std::size_t a : targets) {
                    if (k > a) {
                        throw PlanError("k=" + std::to_string(k) + " exceeds selection archive size " +
                                        std::to_string(a));
                    }
                }
            } else if (std::none_of(targets.begin(), targets.end(), [k](std::size_t a) { return k <= a; })) {
                throw PlanError("k=" + std::to_string(k) + " exceeds every archive size");
            }
        }
    }
}

ExperimentPlan parse_plan_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw PlanError(std::string("plan is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw PlanError("plan must be a JSON object");

    ExperimentPlan plan;
    bool seeds_given = false;
    for (const auto& [key, value] : doc.items()) {
        if (key == "problems") {
            plan.problems = list_of<std::string>(value, "problems");
        } else if (key == "objectives" || key == "m") {
            plan.objectives = value.is_number_integer() ? std::vector<int>{value.get<int>()}
                                                        : list_of<int>(value, "objectives");
        } else if (key == "algorithms") {
            plan.algorithms.clear();
            for (const auto& name : list_of<std::string>(value, "algorithms")) {
                try {
                    plan.algorithms.push_back(parse_scalarizer(name));
                } catch (const ParameterError& e) {
                    throw PlanError(e.what());
                }
            }
        } else if (key == "populations") {
            plan.populations = list_of<std::size_t>(value, "populations");
        } else if (key == "archives") {
            plan.archives = list_of<std::size_t>(value, "archives");
        } else if (key == "methods") {
            plan.methods.clear();
            for (const auto& name : list_of<std::string>(value, "methods")) {
                try {
                    plan.methods.push_back(parse_selection_method(name));
                } catch (const ParameterError& e) {
                    throw PlanError(e.what());
                }
            }
        } else if (key == "k") {
            plan.subset_sizes = value.is_number_integer() ? std::vector<std::size_t>{value.get<std::size_t>()}
                                                          : list_of<std::size_t>(value, "k");
        } else if (key == "selection_archives") {
            plan.selection_archives = list_of<std::size_t>(value, "selection_archives");
        } else if (key == "budgets") {
            if (!value.is_object()) throw PlanError("plan: 'budgets' must map m to evaluations");
            for (const auto& [m, evals] : value.items()) {
                if (!evals.is_number_unsigned()) throw PlanError("plan: budget for m=" + m + " must be a count");
                try {
                    plan.budgets[std::stoi(m)] = evals.get<std::uint64_t>();
                } catch (const std::exception&) {
                    throw PlanError("plan: budget key '" + m + "' is not an objective count");
                }
            }
        } else if (key == "seeds") {
            plan.seeds = list_of<std::uint64_t>(value, "seeds");
            seeds_given = true;
        } else if (key == "seed_count") {
            if (!value.is_number_unsigned()) throw PlanError("plan: 'seed_count' must be a count");
            plan.seeds.resize(value.get<std::size_t>());
            std::iota(plan.seeds.begin(), plan.seeds.end(), std::uint64_t{1});
            seeds_given = true;
        } else if (key == "budget_scale") {
            if (!value.is_number()) throw PlanError("plan: 'budget_scale' must be a number");
            plan.budget_scale = value.get<double>();
        } else if (key == "hv_samples") {
            if (!value.is_number_unsigned()) throw PlanError("plan: 'hv_samples' must be a count");
            plan.hv_samples = value.get<std::size_t>();
        } else if (key == "save_archives") {
            if (!value.is_boolean()) throw PlanError("plan: 'save_archives' must be true or false");
            plan.save_archives = value.get<bool>();
        } else if (key == "out") {
            if (!value.is_string()) throw PlanError("plan: 'out' must be a path");
            plan.out_dir = value.get<std::string>();
        } else {
            throw PlanError("plan: unknown key '" + key + "'");
        }
    }
    if (!seeds_given) plan.seeds = default_seeds();
    return plan;
}

ExperimentPlan read_plan_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open plan file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_plan_json(text.str());
}

std::string plan_to_json(const ExperimentPlan& plan) {
    json doc;
    doc["problems"] = plan.problems;
    doc["objectives"] = plan.objectives;
    json algos = json::array();
    for (const auto& s : plan.algorithms) algos.push_back(std::string(scalarizer_name(s)));
    doc["algorithms"] = algos;
    doc["populations"] = plan.populations;
    doc["archives"] = plan.archives;
    json methods = json::array();
    for (auto method : plan.methods) methods.push_back(std::string(selection_method_name(method)));
    doc["methods"] = methods;
    doc["k"] = plan.subset_sizes;
    doc["selection_archives"] = plan.selection_archives;
    json budgets = json::object();
    for (const auto& [m, evals] : plan.budgets) budgets[std::to_string(m)] = evals;
    doc["budgets"] = budgets;
    doc["seeds"] = plan.seeds;
    doc["budget_scale"] = plan.budget_scale;
    doc["hv_samples"] = plan.hv_samples;
    doc["save_archives"] = plan.save_archives;
    doc["out"] = plan.out_dir.string();
    return doc.dump(2) + "\n";
}

}  // namespace triset::bench
