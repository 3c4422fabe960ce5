#pragma once

#include "latdisc/bigmath.hpp"
#include "latdisc/config.hpp"
#include "latdisc/csv.hpp"
#include "latdisc/exact_count.hpp"
#include "latdisc/experiments.hpp"
#include "latdisc/flat_expansion.hpp"
#include "latdisc/lattice_arith.hpp"
#include "latdisc/main_term.hpp"
#include "latdisc/parallel.hpp"
#include "latdisc/polar_geometry.hpp"
#include "latdisc/quadrature.hpp"
#include "latdisc/rotation_body.hpp"
#include "latdisc/version.hpp"
