// Copyright 2026 The fastrelease Authors
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

#ifndef FAST_RELEASE_HPP_
#define FAST_RELEASE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fast {

// What a released value is, mechanically.
//   kPrior:        filter prediction, no observation at this timestamp.
//   kPosterior:    filter estimate corrected by a noisy observation.
//   kRawPerturbed: the noisy observation itself, passed through.
enum class ReleaseKind { kPrior, kPosterior, kRawPerturbed };

inline const char* to_string(ReleaseKind kind) {
  switch (kind) {
    case ReleaseKind::kPrior:
      return "prior";
    case ReleaseKind::kPosterior:
      return "posterior";
    case ReleaseKind::kRawPerturbed:
      return "raw_perturbed";
  }
  throw std::invalid_argument("to_string: unknown ReleaseKind");
}

inline ReleaseKind release_kind_from_string(const std::string& name) {
  if (name == "prior") return ReleaseKind::kPrior;
  if (name == "posterior") return ReleaseKind::kPosterior;
  if (name == "raw_perturbed") return ReleaseKind::kRawPerturbed;
  throw std::invalid_argument("release_kind_from_string: unknown kind '" + name + "'");
}

// One published value. A full run produces exactly one record per input
// timestamp, in timestamp order.
struct ReleaseRecord {
  std::int64_t timestamp = 0;
  double released = 0.0;
  bool sampled = false;
  double budget_spent = 0.0;
  ReleaseKind kind = ReleaseKind::kPrior;
};

}  // namespace fast

#endif  // FAST_RELEASE_HPP_
