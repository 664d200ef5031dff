#pragma once

#include "mvop/errors.hpp"
#include "mvop/families.hpp"
#include "mvop/hyper.hpp"
#include "mvop/io.hpp"
#include "mvop/matpoly.hpp"
#include "mvop/matrix.hpp"
#include "mvop/pi_rational.hpp"
#include "mvop/quadrature.hpp"
#include "mvop/rational.hpp"
#include "mvop/spectra.hpp"
#include "mvop/verify.hpp"
