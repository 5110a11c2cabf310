// Copyright (c) 2026 The fiveq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fiveq/circuit.hpp"
#include "fiveq/cli.hpp"
#include "fiveq/code.hpp"
#include "fiveq/core.hpp"
#include "fiveq/decoder.hpp"
#include "fiveq/lambda.hpp"
#include "fiveq/optimality.hpp"
#include "fiveq/pauli.hpp"
#include "fiveq/perfect_code.hpp"
#include "fiveq/reports.hpp"
