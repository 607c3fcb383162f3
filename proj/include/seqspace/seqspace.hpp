#pragma once

// Umbrella header for the computable sequence-space toolkit.

#include "seqspace/block_partition.hpp"
#include "seqspace/coordinate_space.hpp"
#include "seqspace/envelope.hpp"
#include "seqspace/errors.hpp"
#include "seqspace/norm_attaining.hpp"
#include "seqspace/norms.hpp"
#include "seqspace/random.hpp"
#include "seqspace/samples.hpp"
#include "seqspace/sequence.hpp"
#include "seqspace/spaceability.hpp"
#include "seqspace/summation.hpp"
#include "seqspace/vec.hpp"
