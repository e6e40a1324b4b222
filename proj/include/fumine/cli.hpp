#pragma once

namespace fumine {

// Entry point of the `fumine` tool. Subcommands: mine, gen, verify.
// Returns the process exit code; never throws.
int run_cli(int argc, const char* const* argv);

}  // namespace fumine
