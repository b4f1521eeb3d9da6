#include "excoll/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <stdexcept>

namespace excoll {

namespace {

struct Found {
  std::vector<Collection> zero;
  std::vector<Collection> unknown;
};

void extend(const VarietyModel& model, const std::vector<DivisorClass>& candidates,
            std::vector<DivisorClass>& seq, Verdict so_far, Found& out) {
  if (seq.size() == kFullLength) {
    Collection c{model.tag, seq};
    (so_far == Verdict::Zero ? out.zero : out.unknown).push_back(std::move(c));
    return;
  }
  for (const auto& next : candidates) {
    Verdict v = so_far;
    for (const auto& earlier : seq) {
      v = meet(v, pair_verdict(model, earlier, next));
      if (v == Verdict::Nonzero) break;
    }
    if (v == Verdict::Nonzero) continue;
    seq.push_back(next);
    extend(model, candidates, seq, v, out);
    seq.pop_back();
  }
}

}  // namespace

EnumerationReport enumerate_collections(VarietyTag tag, Coeff window) {
  if (window < 1) throw std::invalid_argument("enumeration window must be >= 1");
  const auto& model = variety_model(tag);

  std::vector<DivisorClass> candidates;
  for (const auto& tc : candidate_classes(tag, window)) candidates.push_back(tc.divisor);

  // Workers pull D1 indices from a shared counter; results land in per-D1
  // slots so the merge order does not depend on scheduling.
  std::vector<Found> per_first(candidates.size());
  std::atomic<std::size_t> next_index{0};
  auto worker = [&] {
    for (std::size_t i = next_index++; i < candidates.size(); i = next_index++) {
      std::vector<DivisorClass> seq{DivisorClass{}, candidates[i]};
      const Verdict v = pair_verdict(model, DivisorClass{}, candidates[i]);
      if (v != Verdict::Nonzero) extend(model, candidates, seq, v, per_first[i]);
    }
  };
  const std::size_t n_workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(candidates.size(), 1));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < n_workers; ++w) jobs.push_back(std::async(std::launch::async, worker));
  for (auto& job : jobs) job.get();

  EnumerationReport report{tag, window, {}, {}};
  for (auto& found : per_first) {
    for (auto& c : found.zero) {
      auto labels = classify_collection(c);
      report.confirmed.push_back({std::move(c), std::move(labels)});
    }
    for (auto& c : found.unknown) report.undetermined.push_back(std::move(c));
  }
  std::sort(report.confirmed.begin(), report.confirmed.end(),
            [](const auto& x, const auto& y) { return x.collection < y.collection; });
  std::sort(report.undetermined.begin(), report.undetermined.end());
  return report;
}

}  // namespace excoll
