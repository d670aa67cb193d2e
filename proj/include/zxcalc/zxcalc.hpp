// Copyright 2026 The zxcalc Authors
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

#pragma once

#include "zxcalc/circuit.hpp"
#include "zxcalc/diagram.hpp"
#include "zxcalc/doubling.hpp"
#include "zxcalc/error.hpp"
#include "zxcalc/phase.hpp"
#include "zxcalc/protocols.hpp"
#include "zxcalc/rules.hpp"
#include "zxcalc/serialize.hpp"
#include "zxcalc/simplify.hpp"
#include "zxcalc/tensor.hpp"
