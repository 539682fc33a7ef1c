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

#ifndef OPENGAMES_PARALLEL_HPP_
#define OPENGAMES_PARALLEL_HPP_

namespace opengames {

// Worker count used by the OpenMP kernels. Defaults to 1 so timings are
// reproducible; the CLI's --threads flag overrides it.
void SetNumThreads(int n);
int NumThreads();

}  // namespace opengames

#endif  // OPENGAMES_PARALLEL_HPP_
