#pragma once

#include "klfree/bounds.hpp"
#include "klfree/certificate.hpp"
#include "klfree/clique_hypergraph.hpp"
#include "klfree/combinations.hpp"
#include "klfree/exact.hpp"
#include "klfree/graph.hpp"
#include "klfree/inequality.hpp"
#include "klfree/log_magnitude.hpp"
#include "klfree/oracle.hpp"
#include "klfree/parallel.hpp"
#include "klfree/report.hpp"
