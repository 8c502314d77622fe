/*
 * Copyright 2026 The gksmote authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "gksmote/bench.hpp"
#include "gksmote/csv.hpp"
#include "gksmote/datagen.hpp"
#include "gksmote/dataset.hpp"
#include "gksmote/density.hpp"
#include "gksmote/error.hpp"
#include "gksmote/evaluation.hpp"
#include "gksmote/gk_smote.hpp"
#include "gksmote/manifest.hpp"
#include "gksmote/metrics.hpp"
#include "gksmote/neighbors.hpp"
#include "gksmote/rng.hpp"
#include "gksmote/smote.hpp"
#include "gksmote/stats.hpp"
#include "gksmote/version.hpp"
