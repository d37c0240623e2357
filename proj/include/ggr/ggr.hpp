#pragma once

#include "ggr/angle.hpp"
#include "ggr/errors.hpp"
#include "ggr/golden_function.hpp"
#include "ggr/identities.hpp"
#include "ggr/quartic.hpp"
#include "ggr/root_tracking.hpp"
#include "ggr/similarity.hpp"
#include "ggr/triangle.hpp"
