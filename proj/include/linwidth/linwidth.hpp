// Copyright 2026 The linwidth Authors
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

#ifndef LINWIDTH_LINWIDTH_HPP_
#define LINWIDTH_LINWIDTH_HPP_

#include "linwidth/approx.hpp"
#include "linwidth/boundary.hpp"
#include "linwidth/bruteforce.hpp"
#include "linwidth/certificate_io.hpp"
#include "linwidth/closure_search.hpp"
#include "linwidth/errors.hpp"
#include "linwidth/generators.hpp"
#include "linwidth/graph.hpp"
#include "linwidth/layouts.hpp"
#include "linwidth/partial_layout.hpp"
#include "linwidth/pathwidth.hpp"
#include "linwidth/sets.hpp"
#include "linwidth/solve_result.hpp"
#include "linwidth/subset_dp.hpp"

#endif  // LINWIDTH_LINWIDTH_HPP_
