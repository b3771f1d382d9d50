#pragma once

// Umbrella header: the exact weight calculus behind cuspidal cohomology of
// GL(n) over number fields — purity and strong purity of dominant integral
// weights, endoscopic weight transfer and its archimedean Langlands
// parameters, generic cohomological representations, automorphic-induction
// infinity types, and the even-orthogonal parity obstruction.

#include "coho/archfield.hpp"
#include "coho/cohomological.hpp"
#include "coho/errors.hpp"
#include "coho/halfint.hpp"
#include "coho/induction.hpp"
#include "coho/params.hpp"
#include "coho/permutation.hpp"
#include "coho/purity.hpp"
#include "coho/serialization.hpp"
#include "coho/transfer.hpp"
#include "coho/weight.hpp"
