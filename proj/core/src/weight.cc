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

#include "translit/weight.h"

#include <stdexcept>
#include <string>

namespace translit {

Weight Weight::FromProbability(double p) {
  if (!(p > 0.0) || p > 1.0 + 1e-9) {
    throw std::invalid_argument("probability out of (0, 1]: " +
                                std::to_string(p));
  }
  if (p >= 1.0) return One();
  return Weight(-std::log(p));
}

}  // namespace translit
