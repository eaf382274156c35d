// dqo.hpp: umbrella header
#pragma once

#include "action_coeffs.hpp"
#include "core_model.hpp"
#include "elementary_fns.hpp"
#include "errata.hpp"
#include "errors.hpp"
#include "fdt_oracle.hpp"
#include "gaussian_state.hpp"
#include "noise_kernels.hpp"
#include "quadrature.hpp"
#include "trigamma.hpp"
#include "units.hpp"
