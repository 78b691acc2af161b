// Copyright 2026 The robcert Authors
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

// Umbrella header.

#ifndef ROBCERT_ROBCERT_HPP
#define ROBCERT_ROBCERT_HPP

#include "robcert/avoidance.hpp"
#include "robcert/certificates.hpp"
#include "robcert/certify.hpp"
#include "robcert/decomposition.hpp"
#include "robcert/errors.hpp"
#include "robcert/gen.hpp"
#include "robcert/io.hpp"
#include "robcert/layers.hpp"
#include "robcert/matrix.hpp"
#include "robcert/oracle.hpp"
#include "robcert/submatrix.hpp"
#include "robcert/uig.hpp"
#include "robcert/values.hpp"
#include "robcert/wat_enum.hpp"

#endif  // ROBCERT_ROBCERT_HPP
