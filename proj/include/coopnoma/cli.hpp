#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coopnoma {

// Command-line front end, callable in-process for tests. `args` mirrors
// main()'s argv without the program name. Returns the process exit status:
//   0  success
//   1  a computation or validation check failed (named on `err`/`out`)
//   2  unusable command line or configuration (diagnostic on `err`)
//   3  file I/O failure (diagnostic on `err`)
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace coopnoma
