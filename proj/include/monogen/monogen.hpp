#pragma once

#include "clifford.hpp"
#include "construction.hpp"
#include "json_io.hpp"
#include "operators.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "render.hpp"
