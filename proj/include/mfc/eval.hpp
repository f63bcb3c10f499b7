#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "mfc/image.hpp"

namespace mfc {

struct ConfusionCounts {
  std::int64_t tp = 0, tn = 0, fp = 0, fn = 0;

  std::int64_t total() const { return tp + tn + fp + fn; }
  // Empty denominators count as perfect (vacuous) agreement.
  double overall_accuracy() const;
  double producers_accuracy() const;  // tp / (tp + fn)
  double users_accuracy() const;      // tp / (tp + fp)
};

// Per-scene agreement between a predicted and a reference mask. Pixels
// that are NoValue in either mask are excluded from every count.
struct SceneEval {
  std::string name;
  ConfusionCounts cloud;   // cloud vs non-cloud
  ConfusionCounts shadow;  // shadow vs non-shadow
  double pred_cloud_fraction = 0.0;
  double ref_cloud_fraction = 0.0;
};

SceneEval evaluate_masks(const MaskLayer& pred, const MaskLayer& ref,
                         std::string name = {});

// Aggregates over scenes: accuracy means plus the cloud-fraction MAE/MRE.
// Scenes with zero reference fraction are excluded from the MRE (counted
// in mre_excluded) but kept in the MAE.
struct AggregateEval {
  int scenes = 0;
  double cloud_oa = 0.0, cloud_pa = 0.0, cloud_ua = 0.0;
  double shadow_oa = 0.0, shadow_pa = 0.0, shadow_ua = 0.0;
  double mae = 0.0;
  double mre = 0.0;
  int mre_excluded = 0;
};

AggregateEval aggregate_eval(const std::vector<SceneEval>& rows);

// Tab-separated report: one row per scene plus an AGGREGATE row; a leading
// comment notes the scene count and MRE exclusions.
void write_report(const std::vector<SceneEval>& rows, const AggregateEval& agg,
                  std::ostream& out);

}  // namespace mfc
