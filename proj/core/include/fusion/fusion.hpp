#pragma once

#include "fusion/analysis.hpp"
#include "fusion/catalog.hpp"
#include "fusion/dimensions.hpp"
#include "fusion/error.hpp"
#include "fusion/exact.hpp"
#include "fusion/group.hpp"
#include "fusion/morphism.hpp"
#include "fusion/ring.hpp"
#include "fusion/subrings.hpp"
