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

#ifndef FAST_SERIES_HPP_
#define FAST_SERIES_HPP_

#include <vector>

namespace fast {

// A univariate aggregate series indexed by discrete timestamps 0..T-1.
// Values are real: aggregate counts stop being integral the moment they
// are perturbed or estimated, so no rounding happens anywhere in the
// library (an optional non-negativity clamp lives in the harness).
using TimeSeries = std::vector<double>;

}  // namespace fast

#endif  // FAST_SERIES_HPP_
