#pragma once

#include "fidlab/certify.hpp"
#include "fidlab/channels.hpp"
#include "fidlab/error.hpp"
#include "fidlab/fidelity.hpp"
#include "fidlab/linalg.hpp"
#include "fidlab/optim.hpp"
#include "fidlab/polar.hpp"
#include "fidlab/qubit_geom.hpp"
#include "fidlab/random.hpp"
#include "fidlab/superop.hpp"
#include "fidlab/tolerances.hpp"
