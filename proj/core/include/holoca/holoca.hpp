#pragma once

#include "holoca/armas.hpp"
#include "holoca/bit_state.hpp"
#include "holoca/circulant.hpp"
#include "holoca/error.hpp"
#include "holoca/evolve.hpp"
#include "holoca/fft.hpp"
#include "holoca/frame.hpp"
#include "holoca/langlet.hpp"
#include "holoca/linearize.hpp"
#include "holoca/polynomial.hpp"
#include "holoca/projectors.hpp"
#include "holoca/reservoir.hpp"
#include "holoca/rule.hpp"
#include "holoca/spectral.hpp"
#include "holoca/tasks.hpp"
