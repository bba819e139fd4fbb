#pragma once

namespace penrose::cli {

/**
 * Command-line entry point (generate / audit / factors / centers / verify /
 * svg). Returns the process exit code: 0 success, 2 usage error, 3 window
 * boundary hit (non-generic offset), 4 verification failure or generator
 * mismatch, 1 other errors.
 */
int runCommand(int argc, const char* const* argv);

}  // namespace penrose::cli
