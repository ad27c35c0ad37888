#pragma once

// Umbrella header: EMSTs, the max MST-ratio, partition strategies, generators,
// and the experiment harness.

#include "mstratio/common.hpp"
#include "mstratio/constructions.hpp"
#include "mstratio/disks.hpp"
#include "mstratio/emst.hpp"
#include "mstratio/experiments.hpp"
#include "mstratio/geometry.hpp"
#include "mstratio/partition.hpp"
#include "mstratio/point_io.hpp"
#include "mstratio/rng.hpp"
