// Copyright 2026 The translit Authors.
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

#ifndef TRANSLIT_TESTS_SUPPORT_DESK_H_
#define TRANSLIT_TESTS_SUPPORT_DESK_H_

#include <string>

#include "commands.h"
#include "translit/model_set.h"

namespace translit::desk {

// Absolute path of a bundled data file.
std::string DataPath(const std::string &name);

const cli::PipelineConfig &Config();
const ModelResources &Resources();
// Built once per process from the bundled resources.
const ModelSet &Models();

}  // namespace translit::desk

#endif  // TRANSLIT_TESTS_SUPPORT_DESK_H_
