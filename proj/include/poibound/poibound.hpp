#pragma once

// Umbrella header for the social POI boundary estimation library.

#include "poibound/benchmark.hpp"
#include "poibound/dbscan.hpp"
#include "poibound/errors.hpp"
#include "poibound/geo.hpp"
#include "poibound/hull.hpp"
#include "poibound/io.hpp"
#include "poibound/isobest.hpp"
#include "poibound/metrics.hpp"
#include "poibound/model.hpp"
#include "poibound/oracle.hpp"
#include "poibound/radial_profile.hpp"
#include "poibound/sobest.hpp"
#include "poibound/synth.hpp"
#include "poibound/tagging.hpp"
