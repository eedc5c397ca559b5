#pragma once

#include "fermat/curve.hpp"
#include "fermat/product.hpp"
#include "fermat/relations.hpp"
#include "fermat/residue.hpp"
#include "fermat/scan.hpp"
#include "fermat/surface.hpp"
#include "fermat/verify.hpp"
