#pragma once

#include "mostar/canonical.hpp"
#include "mostar/constraints.hpp"
#include "mostar/enumerate.hpp"
#include "mostar/errors.hpp"
#include "mostar/families.hpp"
#include "mostar/index.hpp"
#include "mostar/io.hpp"
#include "mostar/report.hpp"
#include "mostar/stats.hpp"
#include "mostar/transforms.hpp"
#include "mostar/tree.hpp"
#include "mostar/verify.hpp"
