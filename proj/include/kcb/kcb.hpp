#pragma once

#include "kcb/adversaries.hpp"
#include "kcb/adversary.hpp"
#include "kcb/chromatic.hpp"
#include "kcb/colorers.hpp"
#include "kcb/component_tracker.hpp"
#include "kcb/component_types.hpp"
#include "kcb/graph.hpp"
#include "kcb/harness.hpp"
#include "kcb/layered_adversary.hpp"
#include "kcb/trace.hpp"
#include "kcb/verify.hpp"
