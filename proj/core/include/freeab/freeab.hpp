#pragma once

#include "freeab/battery.hpp"
#include "freeab/bridge.hpp"
#include "freeab/chain.hpp"
#include "freeab/duality.hpp"
#include "freeab/invariants.hpp"
#include "freeab/matrix.hpp"
#include "freeab/module.hpp"
#include "freeab/oracle.hpp"
#include "freeab/ring.hpp"
#include "freeab/smith.hpp"
#include "freeab/solve.hpp"
