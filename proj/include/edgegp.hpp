#pragma once

#include "edgegp/blocks.hpp"
#include "edgegp/classes.hpp"
#include "edgegp/compute.hpp"
#include "edgegp/distance.hpp"
#include "edgegp/enumerate.hpp"
#include "edgegp/error.hpp"
#include "edgegp/geodesic.hpp"
#include "edgegp/graph.hpp"
#include "edgegp/io.hpp"
#include "edgegp/isomorphism.hpp"
#include "edgegp/paths.hpp"
#include "edgegp/rng.hpp"
#include "edgegp/solver.hpp"
#include "edgegp/verify.hpp"
