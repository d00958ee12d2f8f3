#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace tempograph::cli {

// Exit codes: 0 success, 1 runtime or file error, 2 usage error.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

int run(int argc, const char *const *argv);

} // namespace tempograph::cli
