#ifndef GRAPHMETRIC_GRAPHMETRIC_HPP
#define GRAPHMETRIC_GRAPHMETRIC_HPP

// Umbrella header: joint metrics on graph-coupled products of normalized
// metric spaces, their graphon limit, and distance-distribution experiments.

#include "csv.hpp"
#include "digraph.hpp"
#include "elemental_metric.hpp"
#include "errors.hpp"
#include "experiment.hpp"
#include "generators.hpp"
#include "graph_json.hpp"
#include "graphon.hpp"
#include "joint_metric.hpp"
#include "parallel.hpp"
#include "product_metric.hpp"
#include "rng.hpp"
#include "verify.hpp"

#endif
