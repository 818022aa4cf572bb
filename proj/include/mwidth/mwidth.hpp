#pragma once

#include "mwidth/core.hpp"
#include "mwidth/error.hpp"
#include "mwidth/generators.hpp"
#include "mwidth/graph_powers.hpp"
#include "mwidth/intervals.hpp"
#include "mwidth/json_io.hpp"
#include "mwidth/oracle.hpp"
#include "mwidth/point_tree.hpp"
#include "mwidth/rational.hpp"
#include "mwidth/theorems.hpp"
#include "mwidth/tree_reduction.hpp"
#include "mwidth/validate.hpp"
