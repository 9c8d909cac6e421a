// Copyright 2026 The Hyperpart Authors.
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

#ifndef HYPERPART_HYPERPART_HPP
#define HYPERPART_HYPERPART_HPP

#include "hyperpart/categorical.hpp"
#include "hyperpart/closed_forms.hpp"
#include "hyperpart/combinatorics.hpp"
#include "hyperpart/error.hpp"
#include "hyperpart/hgr_io.hpp"
#include "hyperpart/hypergraph.hpp"
#include "hyperpart/kmeans.hpp"
#include "hyperpart/misclassification.hpp"
#include "hyperpart/model_json.hpp"
#include "hyperpart/pipeline.hpp"
#include "hyperpart/planted_model.hpp"
#include "hyperpart/sparsity.hpp"
#include "hyperpart/spectral.hpp"
#include "hyperpart/sweep.hpp"

#endif  // HYPERPART_HYPERPART_HPP
