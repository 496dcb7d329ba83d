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

#include "desk.h"

namespace translit::desk {

std::string DataPath(const std::string &name) {
  return std::string(TRANSLIT_TEST_DATA_DIR) + "/" + name;
}

const cli::PipelineConfig &Config() {
  static const cli::PipelineConfig config =
      cli::LoadConfig(DataPath("config.json"));
  return config;
}

const ModelResources &Resources() {
  static const ModelResources resources = cli::LoadResources(Config());
  return resources;
}

const ModelSet &Models() {
  static const ModelSet models = BuildModelSet(Resources());
  return models;
}

}  // namespace translit::desk
