// Command-line surface. The whole CLI runs through cli::run so tests can
// drive it in-process; tools/equising_main.cpp is a thin wrapper.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equising::cli {

// Exit codes: 0 success / affirmative verdict, 1 well-formed negative
// verdict (invalid semigroup, reducible polynomial), 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equising::cli
