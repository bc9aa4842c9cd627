#pragma once

#include "dkp/analysis.hpp"
#include "dkp/check.hpp"
#include "dkp/errors.hpp"
#include "dkp/linalg.hpp"
#include "dkp/matrix.hpp"
#include "dkp/momentum.hpp"
#include "dkp/planewave.hpp"
#include "dkp/projectors.hpp"
#include "dkp/rational.hpp"
#include "dkp/representation.hpp"
#include "dkp/serialization.hpp"
