#pragma once

#include "rotinv/bases.hpp"
#include "rotinv/error.hpp"
#include "rotinv/independence.hpp"
#include "rotinv/invariant_expr.hpp"
#include "rotinv/linalg.hpp"
#include "rotinv/rotation_action.hpp"
#include "rotinv/system_json.hpp"
#include "rotinv/tensor_system.hpp"
