#pragma once

#include "fence/element.hpp"
#include "fence/green.hpp"
#include "fence/ideals.hpp"
#include "fence/maxsub.hpp"
#include "fence/oracle.hpp"
#include "fence/pointset.hpp"
