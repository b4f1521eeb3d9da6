#include "excoll/collection.hpp"

#include <string>
#include <utility>

namespace excoll {

namespace {

void require_full_normalized(const Collection& seq, const char* op) {
  if (seq.size() != kFullLength || !seq.is_normalized()) {
    throw std::invalid_argument(std::string(op) + " requires a normalized collection of length 6");
  }
}

// Dimension of the projective space being blown up.
constexpr std::size_t kAmbientDim = 3;

}  // namespace

Collection normalize(const Collection& seq) {
  if (seq.entries.empty()) throw std::invalid_argument("cannot normalize an empty collection");
  Collection out{seq.variety, {}};
  out.entries.reserve(seq.size());
  const DivisorClass first = seq.entries.front();
  for (const auto& d : seq.entries) out.entries.push_back(d - first);
  return out;
}

Verdict pair_verdict(const VarietyModel& model, DivisorClass dj, DivisorClass di) {
  return coh_zero(model, dj - di);
}

Verdict collection_verdict(const VarietyModel& model, std::span<const DivisorClass> entries) {
  Verdict v = Verdict::Zero;
  for (std::size_t i = 1; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      v = meet(v, pair_verdict(model, entries[j], entries[i]));
      if (v == Verdict::Nonzero) return v;
    }
  }
  return v;
}

Verdict collection_verdict(const Collection& seq) {
  return collection_verdict(variety_model(seq.variety), seq.entries);
}

Collection helix_rotate_right(const Collection& seq) {
  require_full_normalized(seq, "helix_rotate_right");
  const auto& model = variety_model(seq.variety);
  Collection out{seq.variety, {seq.entries.begin() + 1, seq.entries.end()}};
  out.entries.push_back(seq.entries.front() - model.canonical);
  return normalize(out);
}

Collection helix_rotate_left(const Collection& seq) {
  require_full_normalized(seq, "helix_rotate_left");
  const auto& model = variety_model(seq.variety);
  Collection out{seq.variety, {}};
  out.entries.reserve(seq.size());
  out.entries.push_back(seq.entries.back() + model.canonical);
  out.entries.insert(out.entries.end(), seq.entries.begin(), seq.entries.end() - 1);
  return normalize(out);
}

bool is_orthogonal_pair(const Collection& seq, std::size_t i) {
  if (i + 1 >= seq.size()) return false;
  const auto& model = variety_model(seq.variety);
  const auto x = seq.entries[i];
  const auto y = seq.entries[i + 1];
  return pair_verdict(model, x, y) == Verdict::Zero && pair_verdict(model, y, x) == Verdict::Zero;
}

Collection transpose_orthogonal(const Collection& seq, std::size_t i) {
  if (i + 1 >= seq.size()) {
    throw std::out_of_range("transposition index " + std::to_string(i + 1) +
                            " out of range for a collection of length " +
                            std::to_string(seq.size()));
  }
  if (!is_orthogonal_pair(seq, i)) {
    throw NotOrthogonalError("entries " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                             " are not mutually orthogonal");
  }
  Collection out = seq;
  std::swap(out.entries[i], out.entries[i + 1]);
  return normalize(out);
}

Collection augment_point_blowup(std::span<const Coeff> degrees, std::size_t index) {
  const std::size_t n = kAmbientDim;
  const std::size_t l = degrees.size();
  if (l < n + 1) {
    throw std::invalid_argument("augmentation needs at least " + std::to_string(n + 1) +
                                " line bundles on P^3");
  }
  if (index < n - 1 || index > l) {
    throw std::out_of_range("augmentation index " + std::to_string(index) + " outside [" +
                            std::to_string(n - 1) + ", " + std::to_string(l) + "]");
  }
  const auto d = [&](std::size_t k) { return DivisorClass{degrees[k - 1], 0}; };  // 1-based
  const auto e = [](std::size_t k) { return static_cast<Coeff>(k) * kE; };

  Collection out{VarietyTag::BlowupPoint, {}};
  out.entries.reserve(l + n - 1);
  for (std::size_t s = 1; s + n <= index + 1; ++s) out.entries.push_back(d(s) + e(n - 1));
  for (std::size_t s = index + 2 - n; s <= index; ++s) {
    out.entries.push_back(d(s) + e(index - s));
    out.entries.push_back(d(s) + e(index - s + 1));
  }
  for (std::size_t s = index + 1; s <= l; ++s) out.entries.push_back(d(s));
  return out;
}

}  // namespace excoll
