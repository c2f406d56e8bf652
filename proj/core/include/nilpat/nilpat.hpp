#pragma once

#include "nilpat/analysis.hpp"
#include "nilpat/charideal.hpp"
#include "nilpat/coefficients.hpp"
#include "nilpat/error.hpp"
#include "nilpat/groebner.hpp"
#include "nilpat/pattern.hpp"
#include "nilpat/polyring.hpp"
#include "nilpat/position.hpp"
