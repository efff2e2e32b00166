// Copyright 2026 The parqubo authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

/// @file parqubo.hpp
/// @brief Umbrella header: pulls in the whole parqubo library.

#ifndef PARQUBO_PARQUBO_HPP
#define PARQUBO_PARQUBO_HPP

#include "parqubo/bench.hpp"
#include "parqubo/composite.hpp"
#include "parqubo/error.hpp"
#include "parqubo/metrics.hpp"
#include "parqubo/normalize.hpp"
#include "parqubo/problems.hpp"
#include "parqubo/qubo.hpp"
#include "parqubo/remote.hpp"
#include "parqubo/rng.hpp"
#include "parqubo/sample_set.hpp"
#include "parqubo/serialization.hpp"
#include "parqubo/solve_exact.hpp"
#include "parqubo/solve_sa.hpp"

#endif  // PARQUBO_PARQUBO_HPP
