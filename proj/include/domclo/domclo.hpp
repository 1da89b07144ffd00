// Copyright 2026 The Authors.
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

#ifndef DOMCLO_DOMCLO_HPP
#define DOMCLO_DOMCLO_HPP

#include "domclo/category.hpp"
#include "domclo/closure.hpp"
#include "domclo/error.hpp"
#include "domclo/generate.hpp"
#include "domclo/io.hpp"
#include "domclo/operators.hpp"
#include "domclo/properties.hpp"
#include "domclo/random.hpp"
#include "domclo/search.hpp"
#include "domclo/setcore.hpp"
#include "domclo/suite.hpp"
#include "domclo/transforms.hpp"

#endif  // DOMCLO_DOMCLO_HPP
