#pragma once

#include "quatode/complex_adjoint.hpp"
#include "quatode/determinant.hpp"
#include "quatode/eigen.hpp"
#include "quatode/errors.hpp"
#include "quatode/expr.hpp"
#include "quatode/fundamental.hpp"
#include "quatode/permutation.hpp"
#include "quatode/qmatrix.hpp"
#include "quatode/quadrature.hpp"
#include "quatode/quaternion.hpp"
#include "quatode/solver.hpp"
#include "quatode/verify.hpp"
