#pragma once

// Exact-arithmetic toolkit for skew-symmetric integer matrices: matrix
// mutation, the binary delta invariant (determinant of the symmetric
// companion modulo 4), classical congruence baselines, and searches for
// congruent pairs the invariant distinguishes.

#include "skewmut/arf.hpp"
#include "skewmut/congruence.hpp"
#include "skewmut/delta.hpp"
#include "skewmut/determinant.hpp"
#include "skewmut/digest.hpp"
#include "skewmut/fixtures.hpp"
#include "skewmut/int_matrix.hpp"
#include "skewmut/lemmas.hpp"
#include "skewmut/markov.hpp"
#include "skewmut/matrix_io.hpp"
#include "skewmut/mutation.hpp"
#include "skewmut/orbit.hpp"
#include "skewmut/rng.hpp"
#include "skewmut/skew.hpp"
#include "skewmut/smith.hpp"
#include "skewmut/verify.hpp"
