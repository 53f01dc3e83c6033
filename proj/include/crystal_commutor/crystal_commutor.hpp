#pragma once

#include "checks.hpp"
#include "commutor.hpp"
#include "error.hpp"
#include "format.hpp"
#include "growth.hpp"
#include "root_system.hpp"
#include "sweep.hpp"
#include "tensor.hpp"
#include "weight.hpp"
