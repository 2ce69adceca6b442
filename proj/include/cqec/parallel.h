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

#pragma once

#include <cstddef>

#ifdef CQEC_OMP
#include <omp.h>
#define CQEC_OMP_PRAGMA(content) _Pragma(content)
#else
#define CQEC_OMP_PRAGMA(content)
#endif

namespace cqec {

/// Number of worker threads used by the parallel kernels.
int thread_count();

/// Overrides the worker count. Zero restores the default, which reads
/// COHERENTQEC_THREADS and falls back to the OpenMP default.
void set_thread_count(int n);

/// Which implementation of a kernel to run. The serial reference path is
/// kept for cross-checking and benchmarking.
enum class Exec { serial_reference, parallel };

}  // namespace cqec
