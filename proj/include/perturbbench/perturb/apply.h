// Copyright 2026 The perturbbench Authors
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

#ifndef PERTURBBENCH_PERTURB_APPLY_H_
#define PERTURBBENCH_PERTURB_APPLY_H_

#include "perturbbench/perturb/spec.h"
#include "perturbbench/signal/audio.h"

namespace perturbbench {

// Runs the perturbation described by `spec`. kind none returns the input
// unchanged; stochastic kinds use spec.seed() (0 when unset).
AudioSignal apply(const PerturbationSpec& spec, const AudioSignal& signal);

}  // namespace perturbbench

#endif  // PERTURBBENCH_PERTURB_APPLY_H_
