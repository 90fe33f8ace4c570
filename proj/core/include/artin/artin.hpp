#pragma once

#include "artin/canonical.hpp"
#include "artin/conjugacy.hpp"
#include "artin/geodesic.hpp"
#include "artin/growth.hpp"
#include "artin/langtools.hpp"
#include "artin/words.hpp"
