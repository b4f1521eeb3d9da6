#include "excoll/diophantine.hpp"

#include <algorithm>
#include <stdexcept>

#include "excoll/collection.hpp"

namespace excoll {

Coeff cubic_pair_form(Coeff a, Coeff b) {
  return euler_char_closed(variety_model(VarietyTag::BlowupCubic), {a, b});
}

std::vector<DivisorClass> conic_points(Coeff window) {
  std::vector<DivisorClass> pts;
  for (Coeff a = -window; a <= window; ++a)
    for (Coeff b = -window; b <= window; ++b)
      if (cubic_conic(-a, -b) == 0) pts.push_back({a, b});
  return pts;
}

std::vector<ConicTriple> solve_conic_triples(Coeff window) {
  if (window < 1) throw std::invalid_argument("solver window must be >= 1");
  const auto pts = conic_points(window);
  auto g_zero = [](DivisorClass p, DivisorClass q) {
    const auto d = p - q;
    return cubic_pair_form(d.a, d.b) == 0;
  };
  std::vector<ConicTriple> out;
  for (const auto& p : pts) {
    for (const auto& q : pts) {
      if (!g_zero(p, q)) continue;
      for (const auto& r : pts) {
        if (g_zero(p, r) && g_zero(q, r)) out.push_back({p.a, p.b, q.a, q.b, r.a, r.b});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void chain_search(const VarietyModel& model, DivisorClass base, DivisorClass direction, std::size_t length,
                  Coeff window, std::vector<DivisorClass>& seq, std::vector<Coeff>& params,
                  std::vector<std::vector<Coeff>>& out) {
  if (params.size() == length) {
    out.push_back(params);
    return;
  }
  for (Coeff t = -window; t <= window; ++t) {
    const auto d = base + t * direction;
    bool ok = true;
    for (const auto& earlier : seq) {
      if (pair_verdict(model, earlier, d) != Verdict::Zero) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    seq.push_back(d);
    params.push_back(t);
    chain_search(model, base, direction, length, window, seq, params, out);
    seq.pop_back();
    params.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Coeff>> family_chains(VarietyTag tag, DivisorClass base, DivisorClass direction,
                                              std::size_t length, Coeff window) {
  std::vector<DivisorClass> seq{DivisorClass{}};
  std::vector<Coeff> params;
  std::vector<std::vector<Coeff>> out;
  chain_search(variety_model(tag), base, direction, length, window, seq, params, out);
  return out;
}

}  // namespace excoll
