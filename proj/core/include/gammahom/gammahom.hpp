// Copyright 2026 The gammahom Authors
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

#ifndef GAMMAHOM_GAMMAHOM_HPP
#define GAMMAHOM_GAMMAHOM_HPP

#include "gammahom/chain_complex.hpp"
#include "gammahom/errors.hpp"
#include "gammahom/field_linalg.hpp"
#include "gammahom/gamma.hpp"
#include "gammahom/io.hpp"
#include "gammahom/multi_index.hpp"
#include "gammahom/normalized.hpp"
#include "gammahom/ring.hpp"
#include "gammahom/segal.hpp"
#include "gammahom/simplicial.hpp"
#include "gammahom/smith.hpp"
#include "gammahom/space_spec.hpp"
#include "gammahom/sparse_matrix.hpp"
#include "gammahom/stable.hpp"

#endif  // GAMMAHOM_GAMMAHOM_HPP
