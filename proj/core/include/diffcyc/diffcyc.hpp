#pragma once

#include "diffcyc/cycle.hpp"
#include "diffcyc/enumerate.hpp"
#include "diffcyc/error.hpp"
#include "diffcyc/group.hpp"
#include "diffcyc/homology.hpp"
#include "diffcyc/json.hpp"
#include "diffcyc/lens.hpp"
#include "diffcyc/registry.hpp"
#include "diffcyc/series.hpp"
#include "diffcyc/slicing.hpp"
#include "diffcyc/topology.hpp"
