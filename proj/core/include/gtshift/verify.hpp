#pragma once

#include <vector>

#include "gtshift/enumerate.hpp"
#include "gtshift/poset.hpp"
#include "gtshift/report.hpp"

namespace gtshift::verify {

inline constexpr double kMarginTol = 1e-9;
inline constexpr double kOracleTol = 1e-8;
inline constexpr double kPerronTieTol = 1e-10;

inline const std::vector<double> kDefaultAlphaGrid{0.0, 0.25, 0.5, 0.75, 0.9};

struct CampaignOptions {
  std::vector<double> alpha_grid = kDefaultAlphaGrid;
  double tol = kMarginTol;
  int workers = 1;
  int max_order = kDefaultMaxOrder;
  // Empty means "now".
  std::string timestamp;
};

// Each campaign is exhaustive over enumerate_trees(n). Failures are recorded,
// never thrown.
CampaignReport check_gts_monotonicity(int n, const CampaignOptions& opts = {});
CampaignReport check_kelmans_thm1(int n, const CampaignOptions& opts = {});
CampaignReport check_collapse_thm2(int n, const CampaignOptions& opts = {});
CampaignReport check_minimality(int n, const CampaignOptions& opts = {});
CampaignReport check_identity(int n, const CampaignOptions& opts = {});
CampaignReport check_counterexample(int n, const CampaignOptions& opts = {});
CampaignReport check_poset(int n, const CampaignOptions& opts = {});

}  // namespace gtshift::verify
