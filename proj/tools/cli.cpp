#include "cli.hpp"

#include <ostream>

namespace minorforge {

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  (void)args;
  (void)out;
  err << "minorforge: command surface not wired up yet\n";
  return 3;
}

}  // namespace minorforge
