#pragma once

// Umbrella header.
#include "homspec/bivar_poly.hpp"
#include "homspec/bounds.hpp"
#include "homspec/canonical.hpp"
#include "homspec/enumerate.hpp"
#include "homspec/exact.hpp"
#include "homspec/families.hpp"
#include "homspec/graph.hpp"
#include "homspec/graph6.hpp"
#include "homspec/harness.hpp"
#include "homspec/homomorphism.hpp"
#include "homspec/metrics.hpp"
#include "homspec/optimize.hpp"
#include "homspec/parallel.hpp"
#include "homspec/partition.hpp"
#include "homspec/serialize.hpp"
#include "homspec/spectral.hpp"
#include "homspec/unipoly.hpp"
