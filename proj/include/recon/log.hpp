// Copyright 2026 The sweeprecon Authors.
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

#include <string>

namespace recon {

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// Threshold parsed once from the LOG_LEVEL environment variable
// (error|warn|info|debug); defaults to warn.
LogLevel log_level();

// Writes "[level] message" to stderr when level passes the threshold.
// Diagnostics never go to stdout; stdout is reserved for machine output.
void log(LogLevel level, const std::string& message);

}  // namespace recon
