#pragma once

#include "mea/permutation.hpp"
#include "mea/generation.hpp"
#include "mea/statistics.hpp"
#include "mea/verification.hpp"
#include "mea/format.hpp"
