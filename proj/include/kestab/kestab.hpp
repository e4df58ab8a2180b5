/** Umbrella header. */
#ifndef KESTAB_KESTAB_HPP
#define KESTAB_KESTAB_HPP

#include "kestab/catalog.hpp"
#include "kestab/cone.hpp"
#include "kestab/criterion.hpp"
#include "kestab/hessian.hpp"
#include "kestab/integrate.hpp"
#include "kestab/linalg.hpp"
#include "kestab/montecarlo.hpp"
#include "kestab/polytope.hpp"
#include "kestab/problem.hpp"
#include "kestab/rational.hpp"
#include "kestab/rootsystem.hpp"
#include "kestab/weight_polynomial.hpp"

#endif // KESTAB_KESTAB_HPP
