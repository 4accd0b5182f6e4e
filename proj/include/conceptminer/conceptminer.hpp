#pragma once

#include "conceptminer/concepts.hpp"
#include "conceptminer/context.hpp"
#include "conceptminer/coverage.hpp"
#include "conceptminer/errors.hpp"
#include "conceptminer/index_set.hpp"
#include "conceptminer/io.hpp"
#include "conceptminer/optimal.hpp"
#include "conceptminer/pseudo_concept.hpp"
#include "conceptminer/relevance.hpp"
#include "conceptminer/report.hpp"
#include "conceptminer/rules.hpp"
