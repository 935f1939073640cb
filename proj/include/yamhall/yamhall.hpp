#pragma once

#include "yamhall/shapes.hpp"
#include "yamhall/words.hpp"
#include "yamhall/fillings.hpp"
#include "yamhall/rsk_yam.hpp"
#include "yamhall/qsym_schur.hpp"
#include "yamhall/degraphs.hpp"
#include "yamhall/descent_sets.hpp"
#include "yamhall/parse.hpp"
