#pragma once

// Umbrella header for the library.

#include "qsob/scalar.hpp"
#include "qsob/poly.hpp"
#include "qsob/ratfn.hpp"
#include "qsob/linear.hpp"
#include "qsob/context.hpp"
#include "qsob/qcalc.hpp"
#include "qsob/qhermite.hpp"
#include "qsob/kernels.hpp"
#include "qsob/sobolev.hpp"
#include "qsob/ladder.hpp"
#include "qsob/io.hpp"
#include "qsob/config.hpp"
