#pragma once

#include "lrs/error.hpp"
#include "lrs/gf2.hpp"
#include "lrs/group_algebra.hpp"
#include "lrs/instance.hpp"
#include "lrs/random.hpp"
#include "lrs/solvers/approx.hpp"
#include "lrs/solvers/bruteforce.hpp"
#include "lrs/solvers/kernel.hpp"
#include "lrs/solvers/mld.hpp"
#include "lrs/solvers/subset_dp.hpp"
#include "lrs/reductions/compose.hpp"
#include "lrs/reductions/cubic_graph.hpp"
#include "lrs/reductions/misc.hpp"
#include "lrs/cli/bench.hpp"
#include "lrs/cli/generate.hpp"
#include "lrs/cli/scaffold.hpp"
