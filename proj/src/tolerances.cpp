#include "fracdiff/tolerances.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "fracdiff/errors.hpp"

namespace fracdiff {

Tolerances Tolerances::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open tolerance file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("invalid tolerance file " + path + ": " + e.what());
    }

    Tolerances t;
    auto read = [&j](const char* key, double& slot) {
        if (j.contains(key)) slot = j.at(key).get<double>();
    };
    read("gamma_reflection", t.gamma_reflection);
    read("gamma_recurrence", t.gamma_recurrence);
    read("kummer_identity", t.kummer_identity);
    read("power_plus_semigroup", t.power_plus_semigroup);
    read("step_closed_form", t.step_closed_form);
    read("step_gl", t.step_gl);
    read("bromwich_vs_closed", t.bromwich_vs_closed);
    read("integer_reduction", t.integer_reduction);
    read("semigroup_closed", t.semigroup_closed);
    read("semigroup_gl", t.semigroup_gl);
    read("delta_step_consistency", t.delta_step_consistency);
    read("antiderivative", t.antiderivative);
    read("integer_finite_difference", t.integer_finite_difference);
    read("cable_identity", t.cable_identity);
    read("cable_pde", t.cable_pde);
    read("cable_pde_ratio_low", t.cable_pde_ratio_low);
    read("cable_pde_ratio_high", t.cable_pde_ratio_high);
    read("cable_gradient", t.cable_gradient);
    read("cable_boundary", t.cable_boundary);
    read("cable_attenuation", t.cable_attenuation);
    read("habitual_large_t", t.habitual_large_t);
    read("oracle_concordance", t.oracle_concordance);
    read("refinement_floor", t.refinement_floor);
    read("bromwich_refinement_floor", t.bromwich_refinement_floor);
    read("verify_runtime_seconds", t.verify_runtime_seconds);
    return t;
}

Tolerances Tolerances::resolve(const std::string& cli_path) {
    if (!cli_path.empty()) return from_file(cli_path);
    if (const char* env = std::getenv("FRACDIFF_TOL_FILE"); env && *env)
        return from_file(env);
    return defaults();
}

}  // namespace fracdiff
