#pragma once

#include "distgroup/cayley_table.hpp"
#include "distgroup/check_result.hpp"
#include "distgroup/constructors.hpp"
#include "distgroup/cycles.hpp"
#include "distgroup/enumeration.hpp"
#include "distgroup/permutation.hpp"
#include "distgroup/substructure.hpp"
#include "distgroup/verify.hpp"
