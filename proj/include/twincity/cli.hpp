// Copyright 2026 The twincity developers
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

#pragma once

namespace twincity {

/// Full command-line front end.  Exit code 0 on success, 1 on mathematical
/// errors (reported as JSON {"error": ..., "detail": ...} on stdout), 2 on
/// usage errors (reported as usage text).
int run_cli(int argc, const char* const* argv);

}  // namespace twincity
