// Copyright 2026 The qswitch Authors
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

#ifndef QSWITCH_QSWITCH_HPP
#define QSWITCH_QSWITCH_HPP

#include "qswitch/channels.hpp"
#include "qswitch/errors.hpp"
#include "qswitch/information.hpp"
#include "qswitch/linalg.hpp"
#include "qswitch/protocol.hpp"
#include "qswitch/rng.hpp"
#include "qswitch/sgad_provider.hpp"
#include "qswitch/states.hpp"
#include "qswitch/sweep.hpp"
#include "qswitch/transcript.hpp"

#endif  // QSWITCH_QSWITCH_HPP
