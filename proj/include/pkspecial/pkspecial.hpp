#pragma once

#include "pkspecial/cz_gamma.hpp"
#include "pkspecial/holder.hpp"
#include "pkspecial/nielsen_beta.hpp"
#include "pkspecial/numerics/finite_difference.hpp"
#include "pkspecial/numerics/log_gamma.hpp"
#include "pkspecial/numerics/quadrature.hpp"
#include "pkspecial/numerics/series.hpp"
#include "pkspecial/pk_gamma.hpp"
#include "pkspecial/verifier/registry.hpp"
