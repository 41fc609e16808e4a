#pragma once

#include "circulus/dyadic.hpp"
#include "circulus/elementary.hpp"
#include "circulus/enclosure.hpp"
#include "circulus/errors.hpp"
#include "circulus/rational.hpp"
#include "circulus/render.hpp"
#include "circulus/verdict.hpp"
