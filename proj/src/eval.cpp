#include "mfc/eval.hpp"

#include <cmath>
#include <iomanip>

#include "mfc/errors.hpp"

namespace mfc {

namespace {

double ratio(std::int64_t num, std::int64_t den) {
  return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
}

double fraction_of(const MaskLayer& mask, Label which) {
  std::int64_t hits = 0, valid = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] == Label::NoValue) continue;
    ++valid;
    if (mask[i] == which) ++hits;
  }
  return valid == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(valid);
}

}  // namespace

double ConfusionCounts::overall_accuracy() const { return ratio(tp + tn, total()); }
double ConfusionCounts::producers_accuracy() const { return ratio(tp, tp + fn); }
double ConfusionCounts::users_accuracy() const { return ratio(tp, tp + fp); }

SceneEval evaluate_masks(const MaskLayer& pred, const MaskLayer& ref,
                         std::string name) {
  if (!pred.same_dims(ref))
    throw InputError("dimension mismatch: predicted vs reference mask");

  SceneEval e;
  e.name = std::move(name);
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] == Label::NoValue || ref[i] == Label::NoValue) continue;
    const bool pc = pred[i] == Label::Cloud;
    const bool rc = ref[i] == Label::Cloud;
    if (pc && rc) ++e.cloud.tp;
    else if (pc) ++e.cloud.fp;
    else if (rc) ++e.cloud.fn;
    else ++e.cloud.tn;
    const bool ps = pred[i] == Label::Shadow;
    const bool rs = ref[i] == Label::Shadow;
    if (ps && rs) ++e.shadow.tp;
    else if (ps) ++e.shadow.fp;
    else if (rs) ++e.shadow.fn;
    else ++e.shadow.tn;
  }
  e.pred_cloud_fraction = fraction_of(pred, Label::Cloud);
  e.ref_cloud_fraction = fraction_of(ref, Label::Cloud);
  return e;
}

AggregateEval aggregate_eval(const std::vector<SceneEval>& rows) {
  AggregateEval agg;
  agg.scenes = static_cast<int>(rows.size());
  if (rows.empty()) return agg;

  double mre_sum = 0.0;
  int mre_n = 0;
  for (const SceneEval& r : rows) {
    agg.cloud_oa += r.cloud.overall_accuracy();
    agg.cloud_pa += r.cloud.producers_accuracy();
    agg.cloud_ua += r.cloud.users_accuracy();
    agg.shadow_oa += r.shadow.overall_accuracy();
    agg.shadow_pa += r.shadow.producers_accuracy();
    agg.shadow_ua += r.shadow.users_accuracy();
    const double err = std::abs(r.ref_cloud_fraction - r.pred_cloud_fraction);
    agg.mae += err;
    if (r.ref_cloud_fraction > 0.0) {
      mre_sum += err / r.ref_cloud_fraction;
      ++mre_n;
    } else {
      ++agg.mre_excluded;
    }
  }
  const double n = static_cast<double>(rows.size());
  agg.cloud_oa /= n;
  agg.cloud_pa /= n;
  agg.cloud_ua /= n;
  agg.shadow_oa /= n;
  agg.shadow_pa /= n;
  agg.shadow_ua /= n;
  agg.mae /= n;
  agg.mre = mre_n > 0 ? mre_sum / mre_n : 0.0;
  return agg;
}

void write_report(const std::vector<SceneEval>& rows, const AggregateEval& agg,
                  std::ostream& out) {
  out << "# scenes=" << agg.scenes << " mre_excluded=" << agg.mre_excluded
      << " (scenes with zero reference cloud fraction are skipped by the MRE)\n";
  out << "scene\tcloud_oa\tcloud_pa\tcloud_ua\tshadow_oa\tshadow_pa\t"
         "shadow_ua\tpred_cloud_fraction\tref_cloud_fraction\n";
  out << std::fixed << std::setprecision(6);
  for (const SceneEval& r : rows) {
    out << r.name << '\t' << r.cloud.overall_accuracy() << '\t'
        << r.cloud.producers_accuracy() << '\t' << r.cloud.users_accuracy()
        << '\t' << r.shadow.overall_accuracy() << '\t'
        << r.shadow.producers_accuracy() << '\t' << r.shadow.users_accuracy()
        << '\t' << r.pred_cloud_fraction << '\t' << r.ref_cloud_fraction
        << '\n';
  }
  out << "AGGREGATE\t" << agg.cloud_oa << '\t' << agg.cloud_pa << '\t'
      << agg.cloud_ua << '\t' << agg.shadow_oa << '\t' << agg.shadow_pa << '\t'
      << agg.shadow_ua << '\t' << agg.mae << '\t' << agg.mre << '\n';
}

}  // namespace mfc
