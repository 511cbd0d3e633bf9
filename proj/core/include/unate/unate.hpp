#pragma once

#include "unate/analysis.hpp"
#include "unate/errors.hpp"
#include "unate/exact.hpp"
#include "unate/generator_spec.hpp"
#include "unate/generators.hpp"
#include "unate/hypercube.hpp"
#include "unate/oracle.hpp"
#include "unate/rational.hpp"
#include "unate/schedule.hpp"
#include "unate/table_io.hpp"
#include "unate/tester.hpp"
