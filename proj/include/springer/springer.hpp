#pragma once

#include "springer/basicset.hpp"
#include "springer/decmat.hpp"
#include "springer/errors.hpp"
#include "springer/excdata.hpp"
#include "springer/flinalg.hpp"
#include "springer/lattices.hpp"
#include "springer/meataxe.hpp"
#include "springer/modrep.hpp"
#include "springer/partitions.hpp"
#include "springer/polyfp.hpp"
#include "springer/specht.hpp"
#include "springer/springer_gl.hpp"
#include "springer/weylchar.hpp"
