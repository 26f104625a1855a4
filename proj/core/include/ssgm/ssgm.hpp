/*
Copyright 2026 The ssgm Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include "ssgm/aggregator.hpp"
#include "ssgm/census.hpp"
#include "ssgm/config.hpp"
#include "ssgm/cost_volume.hpp"
#include "ssgm/error.hpp"
#include "ssgm/evalkit.hpp"
#include "ssgm/image.hpp"
#include "ssgm/oracle.hpp"
#include "ssgm/pixelio.hpp"
#include "ssgm/rectify.hpp"
#include "ssgm/stripes.hpp"
