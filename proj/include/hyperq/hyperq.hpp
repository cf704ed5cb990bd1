#pragma once

// Umbrella header: spectra of k-uniform hypergraphs via the incidence-based
// signless Laplacian, with the structural consequences packaged as checks.

#include "hyperq/charpoly.hpp"
#include "hyperq/eigen.hpp"
#include "hyperq/error.hpp"
#include "hyperq/generate.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/io.hpp"
#include "hyperq/matrix.hpp"
#include "hyperq/multigraph.hpp"
#include "hyperq/power.hpp"
#include "hyperq/spectral.hpp"
#include "hyperq/structure.hpp"
#include "hyperq/verify.hpp"
