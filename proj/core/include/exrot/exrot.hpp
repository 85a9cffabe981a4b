#pragma once

// Umbrella header for the ExROT bandwidth-selection toolkit.

#include "exrot/bandwidth.hpp"
#include "exrot/bench.hpp"
#include "exrot/hermite.hpp"
#include "exrot/kde.hpp"
#include "exrot/mixture.hpp"
#include "exrot/quadrature.hpp"
#include "exrot/rng.hpp"
#include "exrot/roughness.hpp"
#include "exrot/stats.hpp"
#include "exrot/tensor.hpp"
