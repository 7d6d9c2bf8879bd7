#pragma once

#include "plancherel/errors.hpp"
#include "plancherel/special_functions.hpp"
#include "plancherel/signatures.hpp"
#include "plancherel/characters.hpp"
#include "plancherel/determinant_identities.hpp"
#include "plancherel/kernels.hpp"
#include "plancherel/coefficients.hpp"
#include "plancherel/unipotent.hpp"
#include "plancherel/calibration.hpp"
#include "plancherel/io.hpp"
