// Copyright 2026 The gapcert Authors
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

#include "gapcert/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace gapcert::kernels {

#if defined(GAPCERT_HAVE_AVX2_TU)
const Backend& avx2_backend();  // defined in kernels_avx2.cpp

namespace {
bool avx2_supported() { return __builtin_cpu_supports("avx2"); }
}  // namespace
#else
namespace {
bool avx2_supported() { return false; }
}  // namespace
#endif

namespace {

const Backend* pick_default() {
  if (const char* env = std::getenv("GAPCERT_KERNELS")) {
    if (const Backend* b = find_backend(env)) return b;
  }
#if defined(GAPCERT_HAVE_AVX2_TU)
  if (avx2_supported()) return &avx2_backend();
#endif
  return &scalar_backend();
}

std::atomic<const Backend*> g_active{nullptr};

}  // namespace

const Backend& active_backend() {
  const Backend* b = g_active.load(std::memory_order_acquire);
  if (b == nullptr) {
    b = pick_default();
    g_active.store(b, std::memory_order_release);
  }
  return *b;
}

void set_backend(const Backend& backend) {
  g_active.store(&backend, std::memory_order_release);
}

const Backend* find_backend(std::string_view name) {
  if (name == "scalar") return &scalar_backend();
#if defined(GAPCERT_HAVE_AVX2_TU)
  if (name == "avx2" && avx2_supported()) return &avx2_backend();
#endif
  return nullptr;
}

std::vector<const Backend*> supported_backends() {
  std::vector<const Backend*> out{&scalar_backend()};
#if defined(GAPCERT_HAVE_AVX2_TU)
  if (avx2_supported()) out.push_back(&avx2_backend());
#endif
  return out;
}

}  // namespace gapcert::kernels
