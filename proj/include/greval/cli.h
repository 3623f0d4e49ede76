// Copyright 2026 The greval Authors
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
//
// Command-line driver. Subcommands:
//
//   evaluate <gold.gr> <pred.gr>   score predictions against a reference
//   stats <corpus.gr>              relation frequencies, genre homogeneity
//   agree <a.gr> <b.gr>            inter-annotator agreement
//   parseval <gold.br> <pred.br>   phrase-structure bracket baseline
//   validate <file.gr>             parse and style-check a corpus
//
// Exit codes: 0 on success (including --help), 1 on data errors
// (diagnostics go to stderr as file:line: message), 2 on usage errors.

#ifndef GREVAL_CLI_H_
#define GREVAL_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace greval {

// Runs the driver on `args` (without the program name). Reports go to
// `out`; diagnostics, warnings, and usage errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace greval

#endif  // GREVAL_CLI_H_
