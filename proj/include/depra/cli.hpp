#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace depra {

/// Entry point of the `depra` tool. `args` excludes the program name.
/// Returns 0 on success, 1 on validation or domain errors, 2 on usage
/// errors; failures are reported on `err` as "error[<code>]: <message>".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace depra
