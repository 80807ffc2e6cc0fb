#pragma once

#include "betti.hpp"
#include "error.hpp"
#include "field.hpp"
#include "ideal.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "module.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "syzygy.hpp"
