#pragma once

#include "qloss/audit.hpp"
#include "qloss/channels.hpp"
#include "qloss/errors.hpp"
#include "qloss/lossmodels.hpp"
#include "qloss/matrix.hpp"
#include "qloss/metrics.hpp"
#include "qloss/serialization.hpp"
#include "qloss/states.hpp"
