// Copyright 2026 The coherentqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cqec/parallel.h"

#include <cstdlib>
#include <string>

namespace cqec {

namespace {
int g_threads = 0;

int default_threads() {
    if (const char *env = std::getenv("COHERENTQEC_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) {
                return v;
            }
        } catch (...) {
        }
    }
#ifdef CQEC_OMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}
}  // namespace

int thread_count() {
    if (g_threads <= 0) {
        g_threads = default_threads();
    }
    return g_threads;
}

void set_thread_count(int n) {
    g_threads = n > 0 ? n : default_threads();
}

}  // namespace cqec
