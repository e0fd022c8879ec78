// Copyright 2026 The qig authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qig/catalog.hpp"
#include "qig/classical_fisher.hpp"
#include "qig/differentials.hpp"
#include "qig/errors.hpp"
#include "qig/model_spec.hpp"
#include "qig/models.hpp"
#include "qig/pure_geometry.hpp"
#include "qig/random.hpp"
#include "qig/report.hpp"
#include "qig/sample_space.hpp"
#include "qig/sld_qfi.hpp"
#include "qig/tensor.hpp"
#include "qig/tolerances.hpp"
#include "qig/types.hpp"
