#pragma once

#include "cubicpm/colouring.hpp"
#include "cubicpm/conjectures.hpp"
#include "cubicpm/constructions.hpp"
#include "cubicpm/error.hpp"
#include "cubicpm/graph.hpp"
#include "cubicpm/io.hpp"
#include "cubicpm/matching.hpp"
#include "cubicpm/named_graphs.hpp"
#include "cubicpm/odd_cycle_cover.hpp"
#include "cubicpm/structure.hpp"
