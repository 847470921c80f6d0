#pragma once

#include "graphcode/bch.hpp"
#include "graphcode/bitvec.hpp"
#include "graphcode/codes.hpp"
#include "graphcode/constructions.hpp"
#include "graphcode/exact.hpp"
#include "graphcode/family.hpp"
#include "graphcode/gf2m.hpp"
#include "graphcode/graph.hpp"
#include "graphcode/subspaces.hpp"
#include "graphcode/verify.hpp"
