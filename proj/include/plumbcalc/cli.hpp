#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plumbcalc::cli {

// Exit codes: 0 ok, 1 mathematical check failed / Distinct, 2 invalid input, 3 Unknown.
int run(int argc, char** argv);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plumbcalc::cli
