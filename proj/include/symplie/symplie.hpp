#pragma once

#include "symplie/rational.hpp"
#include "symplie/matrix.hpp"
#include "symplie/exactlin.hpp"
#include "symplie/liealg.hpp"
#include "symplie/symplectic.hpp"
#include "symplie/nilreduce.hpp"
#include "symplie/affn.hpp"
#include "symplie/io.hpp"
#include "symplie/catalog.hpp"
