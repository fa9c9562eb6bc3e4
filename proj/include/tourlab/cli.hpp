#pragma once

namespace tourlab {

// Exit codes: 0 all checks pass, 2 a verification failed, 1 usage/IO error.
int cli_main(int argc, const char* const* argv);

}  // namespace tourlab
