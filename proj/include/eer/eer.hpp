#pragma once

#include "eer/circle.hpp"
#include "eer/combinatorics.hpp"
#include "eer/error.hpp"
#include "eer/garside.hpp"
#include "eer/presentation.hpp"
#include "eer/reflection.hpp"
#include "eer/reversing.hpp"
#include "eer/simples.hpp"
#include "eer/word.hpp"
