#pragma once

#include "psifrac/closed_forms.hpp"
#include "psifrac/errors.hpp"
#include "psifrac/frac_ops.hpp"
#include "psifrac/kernels.hpp"
#include "psifrac/models.hpp"
#include "psifrac/spaces.hpp"
#include "psifrac/specfun.hpp"
#include "psifrac/volterra.hpp"
