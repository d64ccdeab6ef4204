// Copyright 2026 The Complements Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMPLEMENTS_CLI_HPP_
#define COMPLEMENTS_CLI_HPP_

#include <iosfwd>

namespace complements {

// Runs one CLI invocation. Returns 0 on success, 1 on domain errors and 2
// on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace complements

#endif  // COMPLEMENTS_CLI_HPP_
