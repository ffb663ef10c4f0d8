#pragma once

#include "conedet/barnes.hpp"
#include "conedet/constants.hpp"
#include "conedet/determinants.hpp"
#include "conedet/errors.hpp"
#include "conedet/gamma.hpp"
#include "conedet/hurwitz.hpp"
#include "conedet/identities.hpp"
#include "conedet/pa_oracle.hpp"
#include "conedet/quadrature.hpp"
#include "conedet/result.hpp"
