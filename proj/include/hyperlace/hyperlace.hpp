#pragma once

#include "hyperlace/eigen.hpp"
#include "hyperlace/generator.hpp"
#include "hyperlace/hypergraph.hpp"
#include "hyperlace/interlacing.hpp"
#include "hyperlace/io.hpp"
#include "hyperlace/matrix.hpp"
#include "hyperlace/operators.hpp"
