#include "hypermon/monitor.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include "hypermon/error.hpp"

namespace hypermon {

namespace {

// ---------------------------------------------------------------------------
// Negation normal form over interned nodes. `next` is self-dual under the
// finite-trace semantics because every suffix of the empty trace is empty.

enum class NKind : unsigned char { tt, ff, atom, natom, land, lor, next, until, release };

struct NNode {
    NKind kind;
    std::uint32_t bit = 0;
    std::vector<std::uint32_t> kids;

    auto operator<=>(const NNode&) const = default;
};

// A clause of the one-step expansion: letter constraints for the current
// position plus obligations (node ids) for the rest of the word.
struct StepClause {
    Letter pos = 0;
    Letter neg = 0;
    std::vector<std::uint32_t> obligations;

    auto operator<=>(const StepClause&) const = default;
};

using Clause = std::vector<std::uint32_t>;  // sorted literal ids
using Dnf = std::vector<Clause>;            // sorted, subsumption-free

bool includes(const std::vector<std::uint32_t>& big, const std::vector<std::uint32_t>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<std::uint32_t> merge_sorted(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

class Progression {
public:
    Progression(const std::vector<AtomRef>& support, const BuildLimits& limits) : limits_(limits) {
        for (std::size_t i = 0; i < support.size(); ++i) {
            bits_.emplace(support[i], static_cast<std::uint32_t>(i));
        }
        tt_ = intern({NKind::tt, 0, {}});
        ff_ = intern({NKind::ff, 0, {}});
    }

    std::uint32_t nnf(const Formula& f, bool negated) {
        switch (f.op()) {
        case Op::atom: {
            auto it = bits_.find(f.atom());
            if (it == bits_.end()) {
                throw SupportMismatchError("atom " + to_string(f.atom()) + " is not in the support");
            }
            return intern({negated ? NKind::natom : NKind::atom, it->second, {}});
        }
        case Op::tt:
            return negated ? ff_ : tt_;
        case Op::ff:
            return negated ? tt_ : ff_;
        case Op::lnot:
            return nnf(f.arg(0), !negated);
        case Op::lor:
        case Op::land: {
            const bool disj = (f.op() == Op::lor) != negated;
            std::vector<std::uint32_t> kids;
            for (const auto& a : f.args()) {
                kids.push_back(nnf(a, negated));
            }
            return junction(disj, std::move(kids));
        }
        case Op::next:
            return intern({NKind::next, 0, {nnf(f.arg(0), negated)}});
        case Op::until:
            // !(a U b) == !a R !b
            return intern({negated ? NKind::release : NKind::until, 0,
                           {nnf(f.arg(0), negated), nnf(f.arg(1), negated)}});
        default:
            throw Error("progression expects a desugared formula");
        }
    }

    bool eps(std::uint32_t id) {
        const NNode& n = nodes_[id];
        switch (n.kind) {
        case NKind::tt:
        case NKind::natom:
            return true;
        case NKind::ff:
        case NKind::atom:
            return false;
        case NKind::land:
            return std::all_of(n.kids.begin(), n.kids.end(), [this](auto k) { return eps(k); });
        case NKind::lor:
            return std::any_of(n.kids.begin(), n.kids.end(), [this](auto k) { return eps(k); });
        case NKind::next:
            return eps(n.kids[0]);
        case NKind::until:
        case NKind::release:
            return eps(n.kids[1]);
        }
        return false;
    }

    bool eps(const Dnf& state) {
        return std::any_of(state.begin(), state.end(), [this](const Clause& c) {
            return std::all_of(c.begin(), c.end(), [this](auto l) { return eps(l); });
        });
    }

    Dnf dnf_of_node(std::uint32_t id) {
        if (auto it = dnf_cache_.find(id); it != dnf_cache_.end()) {
            return it->second;
        }
        const NNode n = nodes_[id];
        Dnf out;
        switch (n.kind) {
        case NKind::tt:
            out = {Clause{}};
            break;
        case NKind::ff:
            break;
        case NKind::land:
            out = {Clause{}};
            for (auto k : n.kids) {
                out = dnf_and(out, dnf_of_node(k));
            }
            break;
        case NKind::lor:
            for (auto k : n.kids) {
                auto d = dnf_of_node(k);
                out.insert(out.end(), d.begin(), d.end());
            }
            out = normalize(std::move(out));
            break;
        default:
            out = {Clause{id}};
            break;
        }
        dnf_cache_.emplace(id, out);
        return out;
    }

    Dnf dnf_and(const Dnf& a, const Dnf& b) {
        Dnf out;
        out.reserve(a.size() * b.size());
        for (const auto& x : a) {
            for (const auto& y : b) {
                out.push_back(merge_sorted(x, y));
            }
        }
        check_clauses(out.size());
        return normalize(std::move(out));
    }

    // Drops contradictory clauses, duplicates and subsumed clauses.
    Dnf normalize(Dnf d) {
        std::erase_if(d, [this](const Clause& c) {
            Letter pos = 0;
            Letter neg = 0;
            for (auto l : c) {
                const NNode& n = nodes_[l];
                if (n.kind == NKind::atom) pos |= Letter{1} << n.bit;
                if (n.kind == NKind::natom) neg |= Letter{1} << n.bit;
            }
            return (pos & neg) != 0;
        });
        std::sort(d.begin(), d.end(), [](const Clause& x, const Clause& y) {
            return x.size() != y.size() ? x.size() < y.size() : x < y;
        });
        d.erase(std::unique(d.begin(), d.end()), d.end());
        Dnf kept;
        for (auto& c : d) {
            const bool subsumed =
                std::any_of(kept.begin(), kept.end(), [&](const Clause& k) { return includes(c, k); });
            if (!subsumed) {
                kept.push_back(std::move(c));
            }
        }
        std::sort(kept.begin(), kept.end());
        return kept;
    }

    const std::vector<StepClause>& unfold(std::uint32_t id) {
        if (auto it = unfold_cache_.find(id); it != unfold_cache_.end()) {
            return it->second;
        }
        const NNode n = nodes_[id];
        std::vector<StepClause> out;
        switch (n.kind) {
        case NKind::tt:
            out = {StepClause{}};
            break;
        case NKind::ff:
            break;
        case NKind::atom:
            out = {StepClause{Letter{1} << n.bit, 0, {}}};
            break;
        case NKind::natom:
            out = {StepClause{0, Letter{1} << n.bit, {}}};
            break;
        case NKind::land:
            out = {StepClause{}};
            for (auto k : n.kids) {
                out = step_and(out, unfold(k));
            }
            break;
        case NKind::lor:
            for (auto k : n.kids) {
                const auto& u = unfold(k);
                out.insert(out.end(), u.begin(), u.end());
            }
            out = normalize(std::move(out));
            break;
        case NKind::next:
            out = {StepClause{0, 0, {n.kids[0]}}};
            break;
        case NKind::until: {
            // b | (a & X(a U b))
            out = unfold(n.kids[1]);
            auto rest = step_and(unfold(n.kids[0]), {StepClause{0, 0, {id}}});
            out.insert(out.end(), rest.begin(), rest.end());
            out = normalize(std::move(out));
            break;
        }
        case NKind::release: {
            // b & (a | X(a R b))
            auto alt = unfold(n.kids[0]);
            alt.push_back(StepClause{0, 0, {id}});
            out = step_and(unfold(n.kids[1]), normalize(std::move(alt)));
            break;
        }
        }
        return unfold_cache_.emplace(id, std::move(out)).first->second;
    }

    std::vector<StepClause> step_and(const std::vector<StepClause>& a, const std::vector<StepClause>& b) {
        std::vector<StepClause> out;
        out.reserve(a.size() * b.size());
        for (const auto& x : a) {
            for (const auto& y : b) {
                StepClause c{x.pos | y.pos, x.neg | y.neg, merge_sorted(x.obligations, y.obligations)};
                if ((c.pos & c.neg) == 0) {
                    out.push_back(std::move(c));
                }
            }
        }
        check_clauses(out.size());
        return normalize(std::move(out));
    }

    std::vector<StepClause> normalize(std::vector<StepClause> cs) {
        std::erase_if(cs, [](const StepClause& c) { return (c.pos & c.neg) != 0; });
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        if (cs.size() > 4096) {
            return cs;
        }
        auto weight = [](const StepClause& c) {
            return std::popcount(c.pos) + std::popcount(c.neg) + static_cast<int>(c.obligations.size());
        };
        std::stable_sort(cs.begin(), cs.end(),
                         [&](const StepClause& x, const StepClause& y) { return weight(x) < weight(y); });
        std::vector<StepClause> kept;
        for (auto& c : cs) {
            const bool subsumed = std::any_of(kept.begin(), kept.end(), [&](const StepClause& k) {
                return (k.pos & ~c.pos) == 0 && (k.neg & ~c.neg) == 0 && includes(c.obligations, k.obligations);
            });
            if (!subsumed) {
                kept.push_back(std::move(c));
            }
        }
        std::sort(kept.begin(), kept.end());
        return kept;
    }

    std::vector<StepClause> expand_state(const Dnf& state) {
        std::vector<StepClause> out;
        for (const auto& clause : state) {
            std::vector<StepClause> acc{StepClause{}};
            for (auto lit : clause) {
                acc = step_and(acc, unfold(lit));
            }
            out.insert(out.end(), acc.begin(), acc.end());
            check_clauses(out.size());
        }
        return normalize(std::move(out));
    }

    Dnf successor(const std::vector<StepClause>& steps, const std::vector<std::uint32_t>& enabled) {
        Dnf out;
        for (auto i : enabled) {
            Dnf acc{Clause{}};
            for (auto o : steps[i].obligations) {
                acc = dnf_and(acc, dnf_of_node(o));
                if (acc.empty()) {
                    break;
                }
            }
            out.insert(out.end(), acc.begin(), acc.end());
            check_clauses(out.size());
        }
        return normalize(std::move(out));
    }

private:
    std::uint32_t intern(NNode n) {
        auto [it, inserted] = index_.try_emplace(n, static_cast<std::uint32_t>(nodes_.size()));
        if (inserted) {
            nodes_.push_back(std::move(n));
        }
        return it->second;
    }

    std::uint32_t junction(bool disj, std::vector<std::uint32_t> kids) {
        const std::uint32_t absorbing = disj ? tt_ : ff_;
        const std::uint32_t neutral = disj ? ff_ : tt_;
        const NKind kind = disj ? NKind::lor : NKind::land;
        std::vector<std::uint32_t> flat;
        for (auto k : kids) {
            if (k == absorbing) {
                return absorbing;
            }
            if (k == neutral) {
                continue;
            }
            if (nodes_[k].kind == kind) {
                flat.insert(flat.end(), nodes_[k].kids.begin(), nodes_[k].kids.end());
            } else {
                flat.push_back(k);
            }
        }
        std::sort(flat.begin(), flat.end());
        flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
        if (flat.empty()) {
            return neutral;
        }
        if (flat.size() == 1) {
            return flat[0];
        }
        return intern({kind, 0, std::move(flat)});
    }

    void check_clauses(std::size_t n) const {
        if (n > limits_.max_clauses) {
            throw ResourceError("monitor construction exceeded " + std::to_string(limits_.max_clauses) +
                                " expansion clauses");
        }
    }

    BuildLimits limits_;
    std::map<AtomRef, std::uint32_t> bits_;
    std::vector<NNode> nodes_;
    std::map<NNode, std::uint32_t> index_;
    std::uint32_t tt_ = 0;
    std::uint32_t ff_ = 0;
    std::unordered_map<std::uint32_t, Dnf> dnf_cache_;
    std::unordered_map<std::uint32_t, std::vector<StepClause>> unfold_cache_;
};

// Fills `target` (one entry per letter) with successor state ids of one state.
class SuccessorTable {
public:
    SuccessorTable(Progression& prog, std::size_t num_bits, std::function<StateId(Dnf)> intern_state,
                   StateId true_state)
        : prog_(prog), full_((Letter{1} << num_bits) - 1), intern_(std::move(intern_state)),
          true_state_(true_state) {}

    void fill(const std::vector<StepClause>& steps, std::vector<StateId>& target) {
        steps_ = &steps;
        target_ = &target;
        memo_.clear();
        std::vector<std::uint32_t> all(steps.size());
        for (std::uint32_t i = 0; i < all.size(); ++i) {
            all[i] = i;
        }
        split(all, 0, 0);
    }

private:
    void split(const std::vector<std::uint32_t>& candidates, Letter care, Letter value) {
        const auto& steps = *steps_;
        std::vector<std::uint32_t> enabled;
        Letter open = 0;
        bool any_undecided = false;
        for (auto i : candidates) {
            const Letter undecided = (steps[i].pos | steps[i].neg) & ~care;
            if (undecided == 0) {
                if (steps[i].obligations.empty()) {
                    assign(care, value, true_state_);
                    return;
                }
                enabled.push_back(i);
            } else {
                any_undecided = true;
                open |= undecided;
            }
        }
        if (!any_undecided) {
            auto it = memo_.find(enabled);
            StateId t = 0;
            if (it != memo_.end()) {
                t = it->second;
            } else {
                t = intern_(prog_.successor(steps, enabled));
                memo_.emplace(enabled, t);
            }
            assign(care, value, t);
            return;
        }
        const Letter bit = open & (~open + 1);
        for (Letter v : {Letter{0}, bit}) {
            std::vector<std::uint32_t> keep;
            keep.reserve(candidates.size());
            for (auto i : candidates) {
                const bool ok = v ? (steps[i].neg & bit) == 0 : (steps[i].pos & bit) == 0;
                if (ok) {
                    keep.push_back(i);
                }
            }
            split(keep, care | bit, value | v);
        }
    }

    void assign(Letter care, Letter value, StateId t) {
        const Letter free = full_ & ~care;
        auto& target = *target_;
        for (Letter s = free;; s = (s - 1) & free) {
            target[value | s] = t;
            if (s == 0) {
                break;
            }
        }
    }

    Progression& prog_;
    Letter full_;
    std::function<StateId(Dnf)> intern_;
    StateId true_state_;
    const std::vector<StepClause>* steps_ = nullptr;
    std::vector<StateId>* target_ = nullptr;
    std::map<std::vector<std::uint32_t>, StateId> memo_;
};

}  // namespace

Dfa compile_body(const Formula& body, const std::vector<AtomRef>& support, const BuildLimits& limits) {
    if (support.size() > limits.max_support) {
        throw ResourceError("support of " + std::to_string(support.size()) + " atoms exceeds the limit of " +
                            std::to_string(limits.max_support));
    }
    if (!std::is_sorted(support.begin(), support.end()) ||
        std::adjacent_find(support.begin(), support.end()) != support.end()) {
        throw SupportMismatchError("support must be sorted and duplicate-free");
    }
    Progression prog(support, limits);
    const std::uint32_t root = prog.nnf(simplify(desugar(body)), false);

    std::map<Dnf, StateId> index;
    std::vector<Dnf> states;
    auto intern_state = [&](Dnf d) -> StateId {
        auto [it, inserted] = index.try_emplace(d, static_cast<StateId>(states.size()));
        if (inserted) {
            if (states.size() >= limits.max_states) {
                throw ResourceError("monitor construction exceeded " + std::to_string(limits.max_states) +
                                    " states");
            }
            states.push_back(std::move(d));
        }
        return it->second;
    };
    intern_state(prog.dnf_of_node(root));
    const StateId true_state = intern_state(Dnf{Clause{}});

    const std::size_t num_letters = std::size_t{1} << support.size();
    SuccessorTable table(prog, support.size(), intern_state, true_state);

    // Letter classes refined state by state: a class splits when the new
    // state sends its letters to different targets.
    std::vector<std::uint32_t> letter_class(num_letters, 0);
    std::uint32_t num_classes = 1;
    std::vector<std::vector<StateId>> rows;
    std::vector<StateId> target(num_letters);
    for (StateId q = 0; q < states.size(); ++q) {
        const Dnf state = states[q];
        table.fill(prog.expand_state(state), target);
        std::unordered_map<std::uint64_t, std::uint32_t> split;
        std::vector<std::uint32_t> parent;
        std::vector<StateId> row;
        for (std::size_t a = 0; a < num_letters; ++a) {
            const std::uint64_t key = (std::uint64_t{letter_class[a]} << 32) | target[a];
            auto [it, inserted] = split.try_emplace(key, static_cast<std::uint32_t>(parent.size()));
            if (inserted) {
                parent.push_back(letter_class[a]);
                row.push_back(target[a]);
            }
            letter_class[a] = it->second;
        }
        for (auto& r : rows) {
            std::vector<StateId> refined(parent.size());
            for (std::size_t c = 0; c < parent.size(); ++c) {
                refined[c] = r[parent[c]];
            }
            r = std::move(refined);
        }
        num_classes = static_cast<std::uint32_t>(parent.size());
        rows.push_back(std::move(row));
    }

    std::vector<StateId> delta;
    delta.reserve(states.size() * num_classes);
    std::vector<char> accepting(states.size());
    for (StateId q = 0; q < states.size(); ++q) {
        delta.insert(delta.end(), rows[q].begin(), rows[q].end());
        accepting[q] = prog.eps(states[q]) ? 1 : 0;
    }
    return minimize(Dfa(support, std::move(letter_class), num_classes, std::move(delta), std::move(accepting), 0));
}

// ---------------------------------------------------------------------------

MonitorTemplate::MonitorTemplate(Dfa dfa, std::vector<TraceVariable> free_variables, TraceAssignment bound)
    : dfa_(std::move(dfa)), free_variables_(std::move(free_variables)), bound_(std::move(bound)) {
    for (const auto& a : dfa_.support()) {
        if (std::find(free_variables_.begin(), free_variables_.end(), a.variable) == free_variables_.end()) {
            throw SupportMismatchError("support atom " + to_string(a) + " is over a non-free variable");
        }
    }
    live_ = live_states(dfa_);
    universal_ = universal_states(dfa_);
}

std::vector<Letter> MonitorTemplate::project(const Trace& t, const TraceVariable& v) const {
    const auto& support = dfa_.support();
    std::vector<Letter> out(t.size(), 0);
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i].variable != v) {
            continue;
        }
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (t.steps[j].contains(support[i].proposition)) {
                out[j] |= Letter{1} << i;
            }
        }
    }
    return out;
}

Word MonitorTemplate::joint_word(const TraceAssignment& tuple) const {
    if (tuple.size() != free_variables_.size()) {
        throw ArityError("tuple has " + std::to_string(tuple.size()) + " traces, template has " +
                         std::to_string(free_variables_.size()) + " free variables");
    }
    Word w;
    for (const auto& v : free_variables_) {
        auto it = tuple.find(v);
        if (it == tuple.end()) {
            throw ArityError("no trace for free variable '" + v.name + "'");
        }
        const auto letters = project(it->second, v);
        if (letters.size() > w.size()) {
            w.resize(letters.size(), 0);
        }
        for (std::size_t j = 0; j < letters.size(); ++j) {
            w[j] |= letters[j];
        }
    }
    return w;
}

MonitorTemplate build_template(const Formula& body, const std::vector<TraceVariable>& vars,
                               const std::vector<AtomRef>& support, const BuildLimits& limits) {
    for (const auto& v : free_variables(body)) {
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
            throw SupportMismatchError("body mentions variable '" + v.name + "' outside the template variables");
        }
    }
    return MonitorTemplate(compile_body(body, support, limits), vars);
}

MonitorTemplate instantiate(const MonitorTemplate& m, const Trace& t, const TraceVariable& v) {
    const auto& vars = m.free_variables();
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
        throw VariableNotFreeError("trace variable '" + v.name + "' is not free in the template");
    }
    const Dfa& d = m.dfa();
    const auto& support = d.support();

    std::vector<AtomRef> rest;
    std::vector<std::size_t> embed_bit;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i].variable != v) {
            rest.push_back(support[i]);
            embed_bit.push_back(i);
        }
    }
    const std::vector<Letter> word = m.project(t, v);
    const std::size_t len = word.size();

    // Distinct letters contributed by t, plus the empty letter used past its end.
    std::vector<Letter> distinct(word.begin(), word.end());
    distinct.push_back(0);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto slot = [&](Letter x) {
        return static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), x) - distinct.begin());
    };
    std::vector<std::size_t> slot_at(len + 1);
    for (std::size_t j = 0; j < len; ++j) {
        slot_at[j] = slot(word[j]);
    }
    slot_at[len] = slot(0);

    // A reduced letter's class is the tuple of template classes it reaches
    // when combined with each distinct letter of t.
    const std::size_t num_letters = std::size_t{1} << rest.size();
    std::vector<std::uint32_t> letter_class(num_letters);
    std::map<std::vector<std::uint32_t>, std::uint32_t> class_ids;
    std::vector<std::vector<std::uint32_t>> class_tuple;
    for (Letter x = 0; x < num_letters; ++x) {
        Letter full = 0;
        for (std::size_t b = 0; b < rest.size(); ++b) {
            if ((x >> b) & 1) {
                full |= Letter{1} << embed_bit[b];
            }
        }
        std::vector<std::uint32_t> key(distinct.size());
        for (std::size_t k = 0; k < distinct.size(); ++k) {
            key[k] = d.letter_class(full | distinct[k]);
        }
        auto [it, inserted] = class_ids.try_emplace(key, static_cast<std::uint32_t>(class_tuple.size()));
        if (inserted) {
            class_tuple.push_back(std::move(key));
        }
        letter_class[x] = it->second;
    }
    const auto k = static_cast<std::uint32_t>(class_tuple.size());

    // Product states (q, j): template state q after j letters of t.
    std::map<std::pair<StateId, std::size_t>, StateId> index;
    std::vector<std::pair<StateId, std::size_t>> states{{d.initial(), 0}};
    index[states[0]] = 0;
    std::vector<StateId> delta;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto [q, j] = states[i];
        for (std::uint32_t c = 0; c < k; ++c) {
            const std::pair<StateId, std::size_t> next{d.next_by_class(q, class_tuple[c][slot_at[j]]),
                                                       std::min(j + 1, len)};
            auto [it, inserted] = index.try_emplace(next, static_cast<StateId>(states.size()));
            if (inserted) {
                states.push_back(next);
            }
            delta.push_back(it->second);
        }
    }
    std::vector<char> accepting(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto [q, j] = states[i];
        const std::span<const Letter> remaining(word.data() + j, len - j);
        accepting[i] = d.accepting(d.run(q, remaining)) ? 1 : 0;
    }

    std::vector<TraceVariable> free;
    for (const auto& x : vars) {
        if (x != v) {
            free.push_back(x);
        }
    }
    TraceAssignment bound = m.bound();
    bound.insert_or_assign(v, t);
    return MonitorTemplate(minimize(Dfa(std::move(rest), std::move(letter_class), k, std::move(delta),
                                        std::move(accepting), 0)),
                           std::move(free), std::move(bound));
}

bool accepts(const MonitorTemplate& m, const TraceAssignment& tuple) {
    return m.dfa().accepts(m.joint_word(tuple));
}

TraceAssignment decode_word(const std::vector<AtomRef>& support, const std::vector<TraceVariable>& vars,
                            std::span<const Letter> word) {
    TraceAssignment out;
    for (const auto& v : vars) {
        Trace t{v.name, std::vector<Step>(word.size())};
        for (std::size_t j = 0; j < word.size(); ++j) {
            for (std::size_t i = 0; i < support.size(); ++i) {
                if (support[i].variable == v && ((word[j] >> i) & 1)) {
                    t.steps[j].insert(support[i].proposition);
                }
            }
        }
        out.emplace(v, std::move(t));
    }
    return out;
}

}  // namespace hypermon
