#pragma once

/// Umbrella header.

#include "finitegap/rational.hpp"
#include "finitegap/sparse_poly.hpp"
#include "finitegap/weierstrass.hpp"
#include "finitegap/linear_solve.hpp"
#include "finitegap/spectral_curve.hpp"
#include "finitegap/halphen.hpp"
#include "finitegap/lame.hpp"
#include "finitegap/verify.hpp"
#include "finitegap/io.hpp"
