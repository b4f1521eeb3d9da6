#include "excoll/mutation.hpp"

#include <charconv>
#include <deque>
#include <map>
#include <stdexcept>

namespace excoll {

std::string to_string(MoveStep step) {
  switch (step.kind) {
    case MoveKind::RotateRight: return "R";
    case MoveKind::RotateLeft: return "L";
    case MoveKind::Transpose: return "T" + std::to_string(step.index + 1);
  }
  return "?";
}

std::optional<MoveStep> parse_move(std::string_view text) {
  if (text == "R") return MoveStep{MoveKind::RotateRight, 0};
  if (text == "L") return MoveStep{MoveKind::RotateLeft, 0};
  if (text.size() >= 2 && text.front() == 'T') {
    std::size_t pos = 0;
    const auto* first = text.data() + 1;
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, pos);
    if (ec == std::errc{} && ptr == last && pos >= 1) return MoveStep{MoveKind::Transpose, pos - 1};
  }
  return std::nullopt;
}

std::string format_moves(const std::vector<MoveStep>& moves) {
  std::string out;
  for (const auto& m : moves) {
    if (!out.empty()) out += ' ';
    out += to_string(m);
  }
  return out;
}

Collection apply_move(const Collection& seq, MoveStep step) {
  switch (step.kind) {
    case MoveKind::RotateRight: return helix_rotate_right(seq);
    case MoveKind::RotateLeft: return helix_rotate_left(seq);
    case MoveKind::Transpose: return transpose_orthogonal(seq, step.index);
  }
  throw std::invalid_argument("unknown move");
}

Collection apply_moves(Collection seq, const std::vector<MoveStep>& moves) {
  for (const auto& m : moves) seq = apply_move(seq, m);
  return seq;
}

std::vector<std::pair<MoveStep, Collection>> neighbours(const Collection& seq) {
  std::vector<std::pair<MoveStep, Collection>> out;
  out.emplace_back(MoveStep{MoveKind::RotateRight, 0}, helix_rotate_right(seq));
  out.emplace_back(MoveStep{MoveKind::RotateLeft, 0}, helix_rotate_left(seq));
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (is_orthogonal_pair(seq, i)) {
      out.emplace_back(MoveStep{MoveKind::Transpose, i}, transpose_orthogonal(seq, i));
    }
  }
  return out;
}

std::optional<std::vector<MoveStep>> find_move_sequence(const Collection& from, const Collection& to,
                                                        std::size_t max_depth) {
  struct Visit {
    std::optional<Collection> parent;
    MoveStep step;
    std::size_t depth;
  };
  std::map<Collection, Visit> seen;
  std::deque<Collection> queue;
  seen.emplace(from, Visit{std::nullopt, {}, 0});
  queue.push_back(from);
  while (!queue.empty()) {
    Collection cur = std::move(queue.front());
    queue.pop_front();
    const std::size_t depth = seen.at(cur).depth;
    if (cur == to) {
      std::vector<MoveStep> path;
      const Collection* node = &cur;
      while (true) {
        const auto& v = seen.at(*node);
        if (!v.parent) break;
        path.push_back(v.step);
        node = &seen.find(*v.parent)->first;
      }
      return std::vector<MoveStep>(path.rbegin(), path.rend());
    }
    if (depth == max_depth) continue;
    for (auto& [step, next] : neighbours(cur)) {
      if (seen.contains(next)) continue;
      seen.emplace(next, Visit{cur, step, depth + 1});
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

bool MutationReport::all_realized() const {
  for (const auto& c : chains) {
    if (!c.closes) return false;
  }
  return true;
}

std::size_t MutationReport::link_count() const {
  std::size_t n = 0;
  for (const auto& c : chains) n += c.links.size();
  return n;
}

std::size_t MutationReport::realized_count() const {
  std::size_t n = 0;
  for (const auto& c : chains)
    for (const auto& l : c.links) n += l.moves.has_value() ? 1 : 0;
  return n;
}

namespace {

TypeLabel label(VarietyTag tag, int index, std::vector<Coeff> params = {}) {
  return TypeLabel{tag, index, std::move(params)};
}

RelationChain search_chain(std::string name, std::vector<Coeff> params, const std::vector<TypeLabel>& labels,
                           bool cyclic) {
  RelationChain chain{std::move(name), std::move(params), {}, cyclic, true};
  std::vector<MoveStep> composed;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    auto moves = find_move_sequence(instantiate(labels[i]), instantiate(labels[i + 1]));
    if (moves) {
      composed.insert(composed.end(), moves->begin(), moves->end());
    } else {
      chain.closes = false;
    }
    chain.links.push_back({labels[i], labels[i + 1], std::move(moves)});
  }
  if (chain.closes && cyclic) {
    chain.closes = apply_moves(instantiate(labels.front()), composed) == instantiate(labels.front());
  }
  return chain;
}

}  // namespace

MutationReport verify_mutation_relations(VarietyTag tag, Coeff param_range) {
  if (param_range < 3) throw std::invalid_argument("relation parameter range must be >= 3");
  MutationReport report{tag, param_range, {}, {}};
  const auto T = tag;
  switch (tag) {
    case VarietyTag::BlowupPoint: {
      for (Coeff a = -param_range; a <= param_range; ++a) {
        // Each arrow lowers the parameter by one; the third arrow reflects it
        // to 4 - a, so two passes return to (1)_a.
        report.chains.push_back(search_chain(
            "(1)->(2)->(3)->(1)", {a},
            {label(T, 1, {a}), label(T, 2, {a - 1}), label(T, 3, {a - 2}), label(T, 1, {4 - a}),
             label(T, 2, {3 - a}), label(T, 3, {2 - a}), label(T, 1, {a})},
            true));
        if (!find_move_sequence(instantiate(label(T, 1, {a})), instantiate(label(T, 2, {a})))) {
          report.diagnostics.push_back("same-parameter link " + format_label(label(T, 1, {a})) + " -> " +
                                       format_label(label(T, 2, {a})) + " not reachable within depth " +
                                       std::to_string(kDefaultSearchDepth));
        }
      }
      report.chains.push_back(search_chain(
          "(4)->(5)->(6)->(7)->(8)->(9)->(4)", {},
          {label(T, 4), label(T, 5), label(T, 6), label(T, 7), label(T, 8), label(T, 9), label(T, 4)}, true));
      break;
    }
    case VarietyTag::BlowupLine:
      for (Coeff a = -param_range; a <= param_range; ++a) {
        for (Coeff b = -param_range; b <= param_range; ++b) {
          report.chains.push_back(search_chain(
              "(1)->(2)->(1)", {a, b},
              {label(T, 1, {a, b}), label(T, 2, {b - a, 3 - a}), label(T, 1, {b - a - 1, 2 - a})}, false));
        }
      }
      break;
    case VarietyTag::BlowupCubic: {
      std::vector<TypeLabel> first, second;
      for (int i = 1; i <= 6; ++i) first.push_back(label(T, i));
      first.push_back(label(T, 1));
      for (int i = 7; i <= 12; ++i) second.push_back(label(T, i));
      second.push_back(label(T, 7));
      report.chains.push_back(search_chain("(1)->...->(6)->(1)", {}, first, true));
      report.chains.push_back(search_chain("(7)->...->(12)->(7)", {}, second, true));
      for (Coeff b = -param_range; b <= param_range; ++b) {
        report.chains.push_back(search_chain(
            "(13)->(14)->(15)->(13)", {b},
            {label(T, 13, {b}), label(T, 14, {b - 1}), label(T, 15, {b - 2}), label(T, 13, {5 - b}),
             label(T, 14, {4 - b}), label(T, 15, {3 - b}), label(T, 13, {b})},
            true));
      }
      break;
    }
  }
  return report;
}

}  // namespace excoll
