#include "delsup/saturation.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace delsup {

void PassiveQueue::push(ClausePtr c) {
  Clause::Id id = c->id();
  by_age_.insert(id);
  by_weight_.emplace(c->weight(), id);
  clauses_.emplace(id, std::move(c));
}

ClausePtr PassiveQueue::pop() {
  bool by_age = (counter_++ % (age_picks_ + weight_picks_)) < age_picks_;
  Clause::Id id = by_age ? *by_age_.begin() : by_weight_.begin()->second;
  auto it = clauses_.find(id);
  ClausePtr c = std::move(it->second);
  clauses_.erase(it);
  by_age_.erase(id);
  by_weight_.erase({c->weight(), id});
  return c;
}

const char* to_string(SaturationStatus s) {
  switch (s) {
    case SaturationStatus::Unsatisfiable: return "Unsatisfiable";
    case SaturationStatus::Saturated: return "Saturated";
    case SaturationStatus::ResourceOut: return "ResourceOut";
  }
  return "?";
}

void SaturationStats::print(std::ostream& os) const {
  os << "% iterations: " << iterations << '\n'
     << "% generated: " << generated << '\n'
     << "% retained: " << retained << '\n'
     << "% refldel simplifications: " << refl_del << '\n'
     << "% duplicate literals removed: " << duplicate_literals << '\n'
     << "% eager binds: " << eager_bind << '\n'
     << "% tautologies deleted: " << tautologies << '\n'
     << "% forward subsumed: " << subsumed << '\n'
     << "% index queries: " << index_queries << '\n'
     << "% index candidates: " << index_candidates << '\n';
  if (index_candidates > 0) {
    double rate = static_cast<double>(generated) / static_cast<double>(index_candidates);
    os << "% index hit rate: " << rate << '\n';
  }
  os << "% active: " << active << '\n' << "% passive: " << passive << '\n';
  for (const auto& [rule, n] : by_rule) os << "% rule " << rule_name(rule) << ": " << n << '\n';
  os << "% time ms: " << elapsed_ms << '\n';
}

namespace {

struct TargetEntry {
  ClausePtr clause;
  LitSide where;
  Position path;
};

struct EqEntry {
  ClausePtr clause;
  LitSide where;
};

struct SubsumptionKey {
  ClausePtr clause;
  std::uint32_t positives;
  std::uint32_t negatives;
  std::uint64_t symbols;
};

std::uint64_t symbol_mask(const Term& t) {
  if (t.is_var()) return 0;
  std::uint64_t m = std::uint64_t{1} << (t.functor() % 64);
  for (const Term& a : t.args()) m |= symbol_mask(a);
  return m;
}

SubsumptionKey subsumption_key(const ClausePtr& c) {
  SubsumptionKey k{c, 0, 0, 0};
  for (const Literal& l : c->literals()) {
    (l.positive ? k.positives : k.negatives) += 1;
    k.symbols |= symbol_mask(l.lhs) | symbol_mask(l.rhs);
  }
  return k;
}

class Saturator {
 public:
  explicit Saturator(const SaturationConfig& config)
      : config_(config),
        calculus_(Kbo(config.kbo), config.selection),
        passive_(config.age_picks, config.weight_picks),
        start_(std::chrono::steady_clock::now()) {}

  SaturationResult run(const std::vector<ClausePtr>& input) {
    for (const ClausePtr& c : input) {
      admit(c);
      if (result_.refutation) return finish(SaturationStatus::Unsatisfiable);
    }
    while (!passive_.empty()) {
      if (config_.time_limit > 0 && elapsed_s() >= config_.time_limit) {
        return resource_out(ResourceKind::Time);
      }
      if (config_.max_iterations > 0 && result_.stats.iterations >= config_.max_iterations) {
        return resource_out(ResourceKind::Iterations);
      }
      ClausePtr given = pick_given(passive_);
      ++result_.stats.iterations;
      generate(given);
      if (result_.refutation) return finish(SaturationStatus::Unsatisfiable);
      if (aborted_) return resource_out(ResourceKind::Time);
      if (config_.max_clauses > 0 && kept_.size() > config_.max_clauses) {
        return resource_out(ResourceKind::Clauses);
      }
    }
    return finish(SaturationStatus::Saturated);
  }

 private:
  bool allowed(Rule r) const {
    return config_.allowed_rules.empty() || config_.allowed_rules.count(r) > 0;
  }
  bool eager() const { return config_.mode == CalculusMode::DelayedEager; }
  bool use_fingerprints() const { return config_.mode != CalculusMode::Delayed; }

  double elapsed_s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  SaturationResult resource_out(ResourceKind kind) {
    result_.resource = kind;
    return finish(SaturationStatus::ResourceOut);
  }

  SaturationResult finish(SaturationStatus status) {
    result_.status = status;
    if (status == SaturationStatus::Unsatisfiable) result_.proof = extract_proof(result_.refutation);
    result_.stats.active = active_count_;
    result_.stats.passive = passive_.size();
    result_.stats.elapsed_ms = elapsed_s() * 1000.0;
    return std::move(result_);
  }

  // --- simplification -----------------------------------------------------

  ClausePtr from(std::optional<Inference> inf) {
    ++result_.stats.by_rule[inf->record.rule];
    return inf->to_clause();
  }

  /// Runs the destructive simplifications; returns nullptr when deleted.
  ClausePtr simplify(ClausePtr c) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::uint32_t i = 0; i < c->size() && !changed; ++i) {
        if (auto inf = calculus_.refl_del(c, i, true)) {
          c = from(std::move(inf));
          ++result_.stats.refl_del;
          changed = true;
        }
      }
      if (changed) continue;
      for (std::uint32_t i = 1; i < c->size() && !changed; ++i) {
        for (std::uint32_t j = 0; j < i; ++j) {
          if ((*c)[i] != (*c)[j]) continue;
          InferenceRecord rec;
          rec.rule = Rule::DuplicateElim;
          rec.simplification = true;
          rec.premises = {c};
          rec.lit_a = static_cast<int>(i);
          c = from(calculus_.replay(rec));
          ++result_.stats.duplicate_literals;
          changed = true;
          break;
        }
      }
      if (changed || !eager()) continue;
      for (std::uint32_t i = 0; i < c->size() && !changed; ++i) {
        if (auto inf = calculus_.bind(c, i, true)) {
          c = from(std::move(inf));
          ++result_.stats.eager_bind;
          changed = true;
        }
      }
    }
    if (is_tautology(*c)) {
      ++result_.stats.tautologies;
      return nullptr;
    }
    if (config_.forward_subsumption && forward_subsumed(*c)) {
      ++result_.stats.subsumed;
      return nullptr;
    }
    return c;
  }

  bool forward_subsumed(const Clause& c) const {
    SubsumptionKey key{nullptr, 0, 0, 0};
    for (const Literal& l : c.literals()) {
      (l.positive ? key.positives : key.negatives) += 1;
      key.symbols |= symbol_mask(l.lhs) | symbol_mask(l.rhs);
    }
    for (const SubsumptionKey& k : kept_) {
      if (k.positives > key.positives || k.negatives > key.negatives) continue;
      if ((k.symbols & ~key.symbols) != 0) continue;
      if (subsumes(*k.clause, c)) return true;
    }
    return false;
  }

  void admit(ClausePtr c) {
    ClausePtr s = simplify(std::move(c));
    if (!s) return;
    if (s->empty()) {
      result_.refutation = s;
      return;
    }
    kept_.push_back(subsumption_key(s));
    ++result_.stats.retained;
    passive_.push(std::move(s));
  }

  // --- activation and generation ------------------------------------------

  void activate(const ClausePtr& c, std::vector<EqEntry>& eqs, std::vector<TargetEntry>& targets) {
    const Kbo& kbo = calculus_.ordering();
    std::span<const Literal> lits = c->literals();
    std::vector<std::uint32_t> sel = select(config_.selection, kbo, lits);
    for (std::uint32_t i = 0; i < lits.size(); ++i) {
      bool candidate = sel.empty() ? maximal(kbo, lits, i, false)
                                   : std::find(sel.begin(), sel.end(), i) != sel.end();
      if (!candidate) continue;
      const Literal& l = lits[i];
      for (int side = 0; side < 2; ++side) {
        if (!not_leq(kbo.compare(l.side(side), l.other_side(side)))) continue;
        if (l.positive && sel.empty()) eqs.push_back(EqEntry{c, LitSide{i, side}});
        for_each_subterm(l.side(side), [&](const Term& u, const Position& p) {
          if (!u.is_var()) targets.push_back(TargetEntry{c, LitSide{i, side}, p});
        });
      }
    }
    for (const EqEntry& e : eqs) {
      const Term& lhs = e.clause->literals()[e.where.lit].side(e.where.side);
      if (lhs.is_var()) {
        eqs_var_.push_back(e);
      } else if (use_fingerprints()) {
        eqs_fp_.insert(lhs, e);
      } else {
        eqs_top_.insert(lhs.functor(), true, e);
      }
    }
    for (const TargetEntry& t : targets) {
      const Literal& l = t.clause->literals()[t.where.lit];
      const Term& u = subterm_at(l.side(t.where.side), t.path);
      targets_all_.push_back(t);
      if (use_fingerprints()) {
        targets_fp_.insert(u, t);
      } else {
        targets_top_.insert(u.functor(), l.positive, t);
      }
    }
    ++active_count_;
  }

  void emit(std::optional<Inference> inf) {
    if (!inf || aborted_ || result_.refutation) return;
    if (!allowed(inf->record.rule)) return;
    ++result_.stats.generated;
    ++result_.stats.by_rule[inf->record.rule];
    if (config_.time_limit > 0 && (result_.stats.generated & 63) == 0 &&
        elapsed_s() >= 2 * config_.time_limit) {
      aborted_ = true;
      return;
    }
    admit(inf->to_clause());
  }

  bool binary_allowed() const {
    if (config_.allowed_rules.empty()) return true;
    return allowed(Rule::Sup) || allowed(Rule::VSup) || allowed(Rule::StdSup);
  }

  void generate(const ClausePtr& given) {
    std::vector<EqEntry> eqs;
    std::vector<TargetEntry> targets;
    activate(given, eqs, targets);
    const CalculusMode mode = config_.mode;
    auto& stats = result_.stats;

    if (binary_allowed()) {
      // given as the equation premise, into every active clause (itself included)
      for (const EqEntry& e : eqs) {
        const Term& lhs = given->literals()[e.where.lit].side(e.where.side);
        ++stats.index_queries;
        auto try_target = [&](const TargetEntry& t) {
          ++stats.index_candidates;
          emit(calculus_.superpose(mode, given, e.where, t.clause, t.where, t.path));
        };
        if (lhs.is_var()) {
          for (const TargetEntry& t : targets_all_) try_target(t);
        } else if (use_fingerprints()) {
          targets_fp_.retrieve(lhs, try_target);
        } else {
          targets_top_.retrieve(lhs.functor(), try_target);
        }
        if (aborted_ || result_.refutation) return;
      }
      // active equations into the given clause
      for (const TargetEntry& t : targets) {
        const Term& u = subterm_at(given->literals()[t.where.lit].side(t.where.side), t.path);
        ++stats.index_queries;
        auto try_eq = [&](const EqEntry& e) {
          if (e.clause == given) return;
          ++stats.index_candidates;
          emit(calculus_.superpose(mode, e.clause, e.where, given, t.where, t.path));
        };
        if (use_fingerprints()) {
          eqs_fp_.retrieve(u, try_eq);
        } else {
          eqs_top_.retrieve(u.functor(), true, try_eq);
        }
        for (const EqEntry& e : eqs_var_) try_eq(e);
        if (aborted_ || result_.refutation) return;
      }
    }
    for (Inference& inf : calculus_.unary_inferences(mode, given)) {
      emit(std::move(inf));
      if (aborted_ || result_.refutation) return;
    }
  }

  const SaturationConfig& config_;
  Calculus calculus_;
  PassiveQueue passive_;
  std::chrono::steady_clock::time_point start_;
  SaturationResult result_;
  bool aborted_ = false;
  std::uint64_t active_count_ = 0;

  std::vector<SubsumptionKey> kept_;
  TopSymbolIndex<TargetEntry> targets_top_;
  FingerprintIndex<TargetEntry> targets_fp_;
  std::vector<TargetEntry> targets_all_;
  TopSymbolIndex<EqEntry> eqs_top_;
  FingerprintIndex<EqEntry> eqs_fp_;
  std::vector<EqEntry> eqs_var_;
};

}  // namespace

SaturationResult saturate(const std::vector<ClausePtr>& input, const SaturationConfig& config) {
  Saturator s(config);
  return s.run(input);
}

std::vector<ClausePtr> extract_proof(const ClausePtr& root) {
  std::vector<ClausePtr> out;
  if (!root) return out;
  std::unordered_set<Clause::Id> seen;
  std::vector<ClausePtr> stack{root};
  while (!stack.empty()) {
    ClausePtr c = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(c->id()).second) continue;
    out.push_back(c);
    for (const ClausePtr& p : c->derivation().premises) stack.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const ClausePtr& a, const ClausePtr& b) { return a->id() < b->id(); });
  return out;
}

std::vector<std::string> verify_proof(const std::vector<ClausePtr>& proof, const Calculus& calculus) {
  std::vector<std::string> problems;
  for (const ClausePtr& c : proof) {
    const InferenceRecord& rec = c->derivation();
    if (rec.rule == Rule::Input) continue;
    std::optional<Inference> inf = calculus.replay(rec);
    std::ostringstream msg;
    msg << "step " << c->id() << " (" << rule_name(rec.rule) << "): ";
    if (!inf) {
      msg << "side conditions do not hold on replay";
      problems.push_back(msg.str());
      continue;
    }
    std::vector<Literal> lits = normalize_vars(inf->conclusion);
    bool same = lits.size() == c->size();
    for (std::size_t i = 0; same && i < lits.size(); ++i) {
      const Literal& a = lits[i];
      const Literal& b = (*c)[i];
      same = a.positive == b.positive && a.lhs == b.lhs && a.rhs == b.rhs;
    }
    if (!same) {
      msg << "replayed conclusion differs";
      problems.push_back(msg.str());
    }
  }
  return problems;
}

std::map<Rule, int> proof_rule_counts(const std::vector<ClausePtr>& proof) {
  std::map<Rule, int> counts;
  for (const ClausePtr& c : proof) {
    if (c->derivation().rule != Rule::Input) ++counts[c->derivation().rule];
  }
  return counts;
}

}  // namespace delsup
