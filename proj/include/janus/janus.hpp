// Umbrella include for the whole library.
#pragma once

#include "janus/core.hpp"
#include "janus/dynamics.hpp"
#include "janus/heatmap.hpp"
#include "janus/polynomials.hpp"
#include "janus/random.hpp"
#include "janus/sweep.hpp"
#include "janus/tmjs.hpp"
#include "janus/tmss.hpp"
#include "janus/twin_fock.hpp"
#include "janus/verify.hpp"
#include "janus/wigner.hpp"
