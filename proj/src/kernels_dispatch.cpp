// Copyright 2026 The qlgasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <cstring>

#include "qlgasim/kernels.hpp"

namespace qlgasim::kernels {
namespace {

const KernelOps& choose() {
  const char* forced = std::getenv("QLGASIM_KERNELS");
  if (forced != nullptr) {
    if (std::strcmp(forced, "scalar") == 0) {
      return scalar_ops();
    }
    if (std::strcmp(forced, "avx2") == 0 && avx2_ops() != nullptr) {
      return *avx2_ops();
    }
    // Unknown or unavailable request: fall through to autodetection rather
    // than failing a whole run over an env var typo.
  }
  if (const KernelOps* simd = avx2_ops()) {
    return *simd;
  }
  return scalar_ops();
}

}  // namespace

const KernelOps& active_ops() {
  static const KernelOps& chosen = choose();
  return chosen;
}

}  // namespace qlgasim::kernels
