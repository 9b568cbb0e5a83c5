#pragma once

#include "stirmat/algebra.hpp"
#include "stirmat/base_triangles.hpp"
#include "stirmat/checks.hpp"
#include "stirmat/composites.hpp"
#include "stirmat/errors.hpp"
#include "stirmat/integer.hpp"
#include "stirmat/io.hpp"
#include "stirmat/oracles.hpp"
#include "stirmat/polybasis.hpp"
#include "stirmat/triangle.hpp"
