// SPDX-License-Identifier: MIT
#pragma once

#define MOTIVEQ_VERSION_MAJOR 0
#define MOTIVEQ_VERSION_MINOR 1
#define MOTIVEQ_VERSION_PATCH 0
#define MOTIVEQ_VERSION "0.1.0"
