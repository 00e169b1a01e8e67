// matnorm.hpp - umbrella header.

#pragma once

#include "matnorm/bench.hpp"
#include "matnorm/core.hpp"
#include "matnorm/hardness.hpp"
#include "matnorm/io.hpp"
#include "matnorm/norms.hpp"
#include "matnorm/oracle.hpp"
#include "matnorm/rng.hpp"
#include "matnorm/sign_search.hpp"
#include "matnorm/spectral.hpp"
