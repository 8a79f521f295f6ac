#pragma once

#include "equisum/core.hpp"
#include "equisum/errors.hpp"
#include "equisum/meander.hpp"
#include "equisum/oracle.hpp"
#include "equisum/pisolve.hpp"
#include "equisum/serialize.hpp"
