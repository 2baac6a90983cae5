#pragma once

#include "bruhat.hpp"
#include "cube.hpp"
#include "cyclic.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "exact_cover.hpp"
#include "json_io.hpp"
#include "label_set.hpp"
#include "maps.hpp"
#include "poset.hpp"
#include "tree.hpp"
#include "verify.hpp"
