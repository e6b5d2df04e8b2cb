#pragma once
#include <json.hpp>

#include "lya/manifest.hpp"

namespace lya {

// One command invocation's result. The machine block is the source of truth;
// the text form is rendered from it, so every number a human sees exists in
// the JSON. Exit codes: 0 all affirmative, 1 a mathematical violation or
// negative answer with certificate, 2 input or configuration error.
struct Report {
    nlohmann::ordered_json machine;
    std::string text;
    int exit_code = 0;
};

Report cmd_check(const Manifest& m);
Report cmd_cohomology(const Manifest& m, bool equivariant);
Report cmd_fixed_subalgebra(const Manifest& m);
Report cmd_deformation(const Manifest& m, const std::string& subcommand);

// uniform envelope for configuration failures (exit 2)
Report error_report(const std::string& command, const std::string& message);

}  // namespace lya
