#pragma once

namespace morsekit {

/// Thread count for the OpenMP kernels. A positive request wins; otherwise the
/// MORSEKIT_JOBS environment variable, then the OpenMP default.
int resolve_jobs(int requested = 0);

}  // namespace morsekit
