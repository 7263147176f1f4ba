#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace neron::cli {

// Runs one subcommand. `args` excludes the program name. Writes one JSON document to
// `out`. Returns 0 on success and 2 on any error, reported as
// {"error":{"code":..,"message":..}}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Library operations evaluated by each subcommand.
const std::map<std::string, std::vector<std::string>>& operation_table();

}  // namespace neron::cli
