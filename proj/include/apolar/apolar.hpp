#pragma once

// Umbrella header for the apolarity / Waring rank toolkit.

#include "apolarity.hpp"
#include "catalecticant.hpp"
#include "families.hpp"
#include "matrix.hpp"
#include "multi_index.hpp"
#include "numeric.hpp"
#include "parse.hpp"
#include "points.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "sylvester.hpp"
