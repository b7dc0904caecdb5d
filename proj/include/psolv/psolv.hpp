#pragma once

// Umbrella header for the psolv finite-group kernel.

#include "psolv/analysis.hpp"
#include "psolv/catalog.hpp"
#include "psolv/cohomology.hpp"
#include "psolv/errors.hpp"
#include "psolv/filtration.hpp"
#include "psolv/fp_matrix.hpp"
#include "psolv/group_io.hpp"
#include "psolv/limits.hpp"
#include "psolv/normal_lattice.hpp"
#include "psolv/numeric.hpp"
#include "psolv/perm_group.hpp"
#include "psolv/permutation.hpp"
#include "psolv/report_json.hpp"
#include "psolv/subgroup_ops.hpp"
#include "psolv/sylow.hpp"
#include "psolv/verify.hpp"
