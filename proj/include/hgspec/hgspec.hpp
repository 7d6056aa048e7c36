#pragma once

#include "hgspec/acceptance.hpp"
#include "hgspec/alpha_normal.hpp"
#include "hgspec/extremal.hpp"
#include "hgspec/families.hpp"
#include "hgspec/hypergraph.hpp"
#include "hgspec/mobius.hpp"
#include "hgspec/spectral.hpp"
#include "hgspec/transforms.hpp"
