#pragma once

#include "rw/ramsey/kernel.hpp"
#include "rw/ramsey/search.hpp"
#include "rw/ramsey/checks.hpp"
#include "rw/ramsey/paths.hpp"
