#pragma once

// Umbrella header.

#include "sigspec/applications.hpp"
#include "sigspec/charpoly.hpp"
#include "sigspec/coronal.hpp"
#include "sigspec/generators.hpp"
#include "sigspec/graph_io.hpp"
#include "sigspec/integer_roots.hpp"
#include "sigspec/matrix.hpp"
#include "sigspec/polynomial.hpp"
#include "sigspec/product.hpp"
#include "sigspec/random_instances.hpp"
#include "sigspec/rational.hpp"
#include "sigspec/rational_function.hpp"
#include "sigspec/signed_graph.hpp"
#include "sigspec/spectra.hpp"
#include "sigspec/theorems.hpp"
