#pragma once

#include "fbct/analysis.hpp"
#include "fbct/closedform.hpp"
#include "fbct/errors.hpp"
#include "fbct/field.hpp"
#include "fbct/function.hpp"
#include "fbct/kloosterman.hpp"
#include "fbct/parallel.hpp"
#include "fbct/rootcount.hpp"
#include "fbct/spectrum.hpp"
