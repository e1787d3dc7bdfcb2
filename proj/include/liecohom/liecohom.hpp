#pragma once

#include "basic_data.hpp"
#include "differentials.hpp"
#include "errors.hpp"
#include "expression.hpp"
#include "graded_algebra.hpp"
#include "integral.hpp"
#include "linalg.hpp"
#include "poincare.hpp"
#include "rings.hpp"
#include "scalar.hpp"
#include "serialize.hpp"
#include "torsion.hpp"
#include "verify.hpp"
