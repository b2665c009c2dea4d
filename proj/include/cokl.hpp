#pragma once

#include "cokl/certificate.hpp"
#include "cokl/colouring.hpp"
#include "cokl/cotree.hpp"
#include "cokl/error.hpp"
#include "cokl/ferrers.hpp"
#include "cokl/generate.hpp"
#include "cokl/graph.hpp"
#include "cokl/io.hpp"
#include "cokl/kappa.hpp"
#include "cokl/oracle.hpp"
#include "cokl/partition_sequence.hpp"
#include "cokl/witness.hpp"
