// Copyright 2026 The formula-flow Authors
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

#ifndef FF_FF_HPP_
#define FF_FF_HPP_

#include "ff/bounds.hpp"
#include "ff/electrical.hpp"
#include "ff/error.hpp"
#include "ff/extended.hpp"
#include "ff/formula.hpp"
#include "ff/json_io.hpp"
#include "ff/nand.hpp"
#include "ff/network.hpp"
#include "ff/spanprog.hpp"
#include "ff/sweep.hpp"

#endif  // FF_FF_HPP_
