// Copyright 2026 The opengames Authors
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

#include "support/seed.hpp"

#include <cstdlib>
#include <string>
#include <string_view>

namespace opengames::testing {
namespace {

std::uint64_t g_seed = 2026;

}  // namespace

std::uint64_t TestSeed() { return g_seed; }

void SetTestSeed(std::uint64_t seed) { g_seed = seed; }

void InitSeedFromArgs(int& argc, char** argv) {
  if (const char* env = std::getenv("OPENGAMES_SEED")) {
    g_seed = std::stoull(env);
  }
  int out = 1;
  for (int i = 1; i < argc; ++i) {
    std::string_view arg = argv[i];
    if (arg.starts_with("--seed=")) {
      g_seed = std::stoull(std::string(arg.substr(7)));
    } else {
      argv[out++] = argv[i];
    }
  }
  argc = out;
}

Rng MakeRng(std::uint64_t salt) {
  std::seed_seq seq{g_seed, salt, std::uint64_t{0x9e3779b97f4a7c15ULL}};
  return Rng(seq);
}

}  // namespace opengames::testing
