// Copyright 2026 The ontotier Authors.
//
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

#ifndef ONTOTIER_CLI_HPP_
#define ONTOTIER_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ontotier {

// Runs the command line `args` (without the program name). Exit codes: 0
// success, 1 domain failure, 2 I/O or usage failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ontotier

#endif  // ONTOTIER_CLI_HPP_
