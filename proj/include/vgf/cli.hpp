#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vgf::cli {

/* Runs one command line (program name excluded).  Reports go to out,
   usage and input diagnostics to err.  Exit code: 0 pass, 1 failed check
   or negative verdict, 2 unusable input. */
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace vgf::cli
