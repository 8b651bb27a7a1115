#pragma once

// Umbrella header: the whole library.

#include "shorchip/compiler.hpp"
#include "shorchip/distribution.hpp"
#include "shorchip/experiment.hpp"
#include "shorchip/fock.hpp"
#include "shorchip/photonics.hpp"
#include "shorchip/qubit_oracle.hpp"
#include "shorchip/serialize.hpp"
#include "shorchip/shor_classical.hpp"
#include "shorchip/svg_chart.hpp"
