// Copyright 2026 The srkbench Authors
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

// Everything in one include.

#ifndef SRK_SRK_HPP_
#define SRK_SRK_HPP_

#include "srk/bounds.hpp"
#include "srk/counting.hpp"
#include "srk/gf.hpp"
#include "srk/graph.hpp"
#include "srk/matrix.hpp"
#include "srk/nat.hpp"
#include "srk/params.hpp"
#include "srk/ramsey.hpp"
#include "srk/space.hpp"
#include "srk/sweep.hpp"
#include "srk/verify.hpp"

#endif  // SRK_SRK_HPP_
