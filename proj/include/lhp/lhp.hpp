#pragma once

#include "lhp/error.hpp"
#include "lhp/exact.hpp"
#include "lhp/poset.hpp"
#include "lhp/colored_perms.hpp"
#include "lhp/polynomial.hpp"
#include "lhp/real_roots.hpp"
#include "lhp/series.hpp"
#include "lhp/lattice.hpp"
#include "lhp/report.hpp"
#include "lhp/verify.hpp"
#include "lhp/identities.hpp"
#include "lhp/json_io.hpp"
