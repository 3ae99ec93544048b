#pragma once

#include "ccfrac/error.hpp"
#include "ccfrac/exactnum.hpp"
#include "ccfrac/regions.hpp"
#include "ccfrac/mat2.hpp"
#include "ccfrac/cfrac.hpp"
#include "ccfrac/lattice.hpp"
#include "ccfrac/qform.hpp"
#include "ccfrac/modgroup.hpp"
#include "ccfrac/cutting.hpp"
