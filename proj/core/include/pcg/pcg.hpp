#pragma once

#include "pcg/closedform.hpp"
#include "pcg/graph.hpp"
#include "pcg/groups.hpp"
#include "pcg/mis.hpp"
#include "pcg/numth.hpp"
