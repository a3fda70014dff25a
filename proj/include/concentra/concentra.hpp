#pragma once

#include "concentra/communities.hpp"
#include "concentra/community_analysis.hpp"
#include "concentra/error.hpp"
#include "concentra/fast_greedy.hpp"
#include "concentra/graph.hpp"
#include "concentra/hemicycle.hpp"
#include "concentra/metrics.hpp"
#include "concentra/random_ensemble.hpp"
#include "concentra/report.hpp"
#include "concentra/rich_club.hpp"
#include "concentra/rng.hpp"
#include "concentra/spectral.hpp"
#include "concentra/walktrap.hpp"

namespace concentra {
inline constexpr const char* kVersion = "0.1.0";
}
