#pragma once

#include "lietrans/algebra.hpp"
#include "lietrans/gauss_demo.hpp"
#include "lietrans/io.hpp"
#include "lietrans/lattice.hpp"
#include "lietrans/orbit_function.hpp"
#include "lietrans/transform.hpp"
#include "lietrans/types.hpp"
#include "lietrans/weyl.hpp"
