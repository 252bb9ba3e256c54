#pragma once

#include "tensor.hpp"
#include "medium.hpp"
#include "dispersion.hpp"
#include "mapping.hpp"
#include "emtensor.hpp"
#include "forces.hpp"
