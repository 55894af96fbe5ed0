// Copyright 2026 The Colorlab Authors.
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


// The colorlab command-line tool: gen, lp, sa, cert, bichrom, gap and run.
// Every subcommand prints one JSON document (or writes it to --out), exits 0
// when all checks pass, 1 when a check fails and 2 on usage, input, budget
// or IO errors.

#ifndef COLORLAB_CLI_H_
#define COLORLAB_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace colorlab::cli {

// `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int Main(int argc, char** argv);

}  // namespace colorlab::cli

#endif  // COLORLAB_CLI_H_
