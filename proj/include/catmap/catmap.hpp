#pragma once

// Convenience umbrella for the whole library.

#include "catmap/charpoly.hpp"
#include "catmap/dcm_builder.hpp"
#include "catmap/exact_matrix.hpp"
#include "catmap/fibonacci.hpp"
#include "catmap/int_types.hpp"
#include "catmap/orbit.hpp"
#include "catmap/period.hpp"
#include "catmap/ppm.hpp"
#include "catmap/raster.hpp"
#include "catmap/residue_matrix.hpp"
#include "catmap/spectrum.hpp"
