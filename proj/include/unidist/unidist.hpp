#pragma once

#include "unidist/classify.hpp"
#include "unidist/decompose.hpp"
#include "unidist/degree_sequence.hpp"
#include "unidist/dist_counts.hpp"
#include "unidist/families.hpp"
#include "unidist/graph.hpp"
#include "unidist/oracle.hpp"
#include "unidist/text.hpp"
