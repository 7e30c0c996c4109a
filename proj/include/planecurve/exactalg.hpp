#pragma once

#include "planecurve/algebra.hpp"
#include "planecurve/field.hpp"
#include "planecurve/parse.hpp"
#include "planecurve/poly.hpp"
#include "planecurve/upoly.hpp"
