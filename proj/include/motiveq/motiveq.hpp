// SPDX-License-Identifier: MIT
/// @file motiveq.hpp
/// @brief Convenience umbrella pulling in the whole library.
#pragma once

#include "version.hpp"
#include "errors.hpp"
#include "arith.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"
#include "eqclass.hpp"
#include "tower.hpp"
#include "parse.hpp"
#include "profile.hpp"
#include "oracle.hpp"
#include "varieties.hpp"
#include "jsonio.hpp"
#include "catalog.hpp"
#include "torusknot.hpp"
