// Copyright 2026 The qpcg Authors
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

#ifndef QPCG_QPCG_HPP
#define QPCG_QPCG_HPP

#include "qpcg/bench/generators.hpp"
#include "qpcg/bench/rng.hpp"
#include "qpcg/bench/runner.hpp"
#include "qpcg/io.hpp"
#include "qpcg/linsys.hpp"
#include "qpcg/problem.hpp"
#include "qpcg/scaling.hpp"
#include "qpcg/settings.hpp"
#include "qpcg/solver.hpp"
#include "qpcg/sparse.hpp"
#include "qpcg/types.hpp"
#include "qpcg/vector_ops.hpp"

#endif  // QPCG_QPCG_HPP
