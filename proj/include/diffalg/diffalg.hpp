#pragma once

// Umbrella header: exact Gröbner-Shirshov basis computations in free
// differential algebras.

#include "completion.hpp"
#include "derivation.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "lie.hpp"
#include "oracle.hpp"
#include "ordering.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rewriting.hpp"
#include "substitution.hpp"
#include "symbols.hpp"
#include "term.hpp"
