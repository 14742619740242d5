#pragma once

#include "frob/audit.hpp"
#include "frob/core_arith.hpp"
#include "frob/engine.hpp"
#include "frob/errors.hpp"
#include "frob/lattice_region.hpp"
#include "frob/oracle.hpp"
#include "frob/viz.hpp"
