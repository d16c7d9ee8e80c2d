// Copyright 2026 The cayleymd Authors
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

#include "cayleymd/cayley.hpp"
#include "cayleymd/cli.hpp"
#include "cayleymd/errors.hpp"
#include "cayleymd/families.hpp"
#include "cayleymd/graph.hpp"
#include "cayleymd/graph_io.hpp"
#include "cayleymd/group.hpp"
#include "cayleymd/metric.hpp"
#include "cayleymd/predict.hpp"
#include "cayleymd/report.hpp"
#include "cayleymd/sweep.hpp"
