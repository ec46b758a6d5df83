#pragma once

#include "kuga/cyclo.hpp"
#include "kuga/dims.hpp"
#include "kuga/errors.hpp"
#include "kuga/io.hpp"
#include "kuga/matrices.hpp"
#include "kuga/presets.hpp"
#include "kuga/rational.hpp"
#include "kuga/rst.hpp"
#include "kuga/symplectic.hpp"
