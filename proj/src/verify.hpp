#ifndef EULERIAN_VERIFY_HPP
#define EULERIAN_VERIFY_HPP

#include <string>
#include <vector>

namespace eulerian {

/// Named identity checks behind the CLI's verify command. Each target pits
/// one computed identity against exhaustive enumeration (or an independent
/// second route) at a single n and reports pass or fail. Unknown names and
/// n below the target's defined range raise std::invalid_argument.
std::vector<std::string> verify_target_names();
int verify_min_n(const std::string& target);
bool run_verify_target(const std::string& target, int n);

}  // namespace eulerian

#endif
