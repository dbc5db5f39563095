#ifndef COMMONS_CLI_HPP
#define COMMONS_CLI_HPP

#include <string>
#include <vector>

namespace commons {

/// Runs the simulator CLI. Returns 0 on success, 2 on flag or config errors,
/// 1 on runtime failures.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

}  // namespace commons

#endif  // COMMONS_CLI_HPP
