#pragma once

#include "magnus/coeff.hpp"
#include "magnus/completions.hpp"
#include "magnus/coproduct.hpp"
#include "magnus/errors.hpp"
#include "magnus/group.hpp"
#include "magnus/lie.hpp"
#include "magnus/series.hpp"
#include "magnus/words.hpp"
