// Copyright 2026 The ambistl Authors.
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

// Umbrella header (everything except the JSON writer, which needs
// nlohmann/json).

#pragma once

#include "ambistl/category.hpp"
#include "ambistl/compose.hpp"
#include "ambistl/default_lexicon.hpp"
#include "ambistl/error.hpp"
#include "ambistl/evaluate.hpp"
#include "ambistl/lexicon.hpp"
#include "ambistl/meaning.hpp"
#include "ambistl/parser.hpp"
#include "ambistl/pipeline.hpp"
#include "ambistl/robustness.hpp"
#include "ambistl/stl.hpp"
#include "ambistl/trajectory.hpp"
