#pragma once

#include "compensated_sum.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "identities.hpp"
#include "jet.hpp"
#include "series.hpp"
#include "special_fn.hpp"
