#pragma once

#include "charlattice/abmultiset.hpp"
#include "charlattice/charfile.hpp"
#include "charlattice/charmatch.hpp"
#include "charlattice/error.hpp"
#include "charlattice/goursat.hpp"
#include "charlattice/linalg.hpp"
#include "charlattice/reps.hpp"
#include "charlattice/rootsys.hpp"
#include "charlattice/subsystems.hpp"
#include "charlattice/verify.hpp"
