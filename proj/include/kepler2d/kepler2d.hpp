#pragma once

#include "kepler2d/eigenstates.hpp"
#include "kepler2d/fock_sphere.hpp"
#include "kepler2d/integral_identities.hpp"
#include "kepler2d/operator_algebra.hpp"
#include "kepler2d/quadrature.hpp"
#include "kepler2d/radial_solver.hpp"
#include "kepler2d/reporting.hpp"
#include "kepler2d/special_functions.hpp"
#include "kepler2d/verification.hpp"
