#ifndef TRUCKDRONE_TRUCKDRONE_HPP
#define TRUCKDRONE_TRUCKDRONE_HPP

#include "truckdrone/errors.hpp"
#include "truckdrone/generators.hpp"
#include "truckdrone/geometry.hpp"
#include "truckdrone/model.hpp"
#include "truckdrone/proper.hpp"
#include "truckdrone/solvers.hpp"

#endif  // TRUCKDRONE_TRUCKDRONE_HPP
