// Copyright 2026 The octoclif Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include "octoclif/barred_ops.hpp"
#include "octoclif/clifford.hpp"
#include "octoclif/int_matrix.hpp"
#include "octoclif/matrix_rep.hpp"
#include "octoclif/number.hpp"
#include "octoclif/rank.hpp"
#include "octoclif/scalar.hpp"
#include "octoclif/serialize.hpp"
#include "octoclif/structure_table.hpp"
#include "octoclif/suites.hpp"
