#include "morsekit/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace morsekit {

int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MORSEKIT_JOBS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return omp_get_max_threads();
}

}  // namespace morsekit
