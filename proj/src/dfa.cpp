#include "hypermon/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "hypermon/error.hpp"

namespace hypermon {

Dfa::Dfa(std::vector<AtomRef> support, std::vector<std::uint32_t> letter_class, std::uint32_t num_classes,
         std::vector<StateId> delta, std::vector<char> accepting, StateId initial)
    : support_(std::move(support)),
      letter_class_(std::move(letter_class)),
      num_classes_(num_classes),
      delta_(std::move(delta)),
      accepting_(std::move(accepting)),
      initial_(initial) {
    if (support_.size() >= 63 || letter_class_.size() != (std::size_t{1} << support_.size())) {
        throw Error("Dfa: letter table does not cover 2^|support| letters");
    }
    if (accepting_.empty() || initial_ >= accepting_.size() ||
        delta_.size() != accepting_.size() * static_cast<std::size_t>(num_classes_)) {
        throw Error("Dfa: inconsistent transition table");
    }
    representatives_.assign(num_classes_, ~Letter{0});
    for (Letter a = 0; a < letter_class_.size(); ++a) {
        const auto c = letter_class_[a];
        if (c >= num_classes_) {
            throw Error("Dfa: letter class out of range");
        }
        representatives_[c] = std::min(representatives_[c], a);
    }
    for (auto r : representatives_) {
        if (r == ~Letter{0}) {
            throw Error("Dfa: empty letter class");
        }
    }
    for (auto t : delta_) {
        if (t >= accepting_.size()) {
            throw Error("Dfa: transition target out of range");
        }
    }
}

StateId Dfa::run(StateId from, std::span<const Letter> word) const {
    StateId q = from;
    for (Letter a : word) {
        q = next(q, a);
    }
    return q;
}

namespace {

// Classes sorted by their smallest letter.
std::vector<std::uint32_t> classes_by_representative(const Dfa& d) {
    std::vector<std::uint32_t> order(d.num_classes());
    std::iota(order.begin(), order.end(), 0u);
    const auto& reps = d.class_representatives();
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return reps[x] < reps[y]; });
    return order;
}

// Rebuilds a Dfa whose classes with identical columns are merged.
Dfa merge_equal_classes(std::vector<AtomRef> support, std::span<const std::uint32_t> letter_class,
                        std::uint32_t num_classes, const std::vector<StateId>& delta,
                        std::vector<char> accepting, StateId initial) {
    const std::size_t n = accepting.size();
    std::map<std::vector<StateId>, std::uint32_t> columns;
    std::vector<std::uint32_t> remap(num_classes);
    std::vector<std::vector<StateId>> kept;
    // Number classes by first occurrence in letter order.
    std::vector<std::uint32_t> new_class(letter_class.size());
    std::vector<char> seen(num_classes, 0);
    for (std::size_t a = 0; a < letter_class.size(); ++a) {
        const auto c = letter_class[a];
        if (!seen[c]) {
            seen[c] = 1;
            std::vector<StateId> col(n);
            for (std::size_t q = 0; q < n; ++q) {
                col[q] = delta[q * num_classes + c];
            }
            auto [it, inserted] = columns.try_emplace(col, static_cast<std::uint32_t>(kept.size()));
            if (inserted) {
                kept.push_back(std::move(col));
            }
            remap[c] = it->second;
        }
        new_class[a] = remap[c];
    }
    const auto m = static_cast<std::uint32_t>(kept.size());
    std::vector<StateId> new_delta(n * m);
    for (std::uint32_t c = 0; c < m; ++c) {
        for (std::size_t q = 0; q < n; ++q) {
            new_delta[q * m + c] = kept[c][q];
        }
    }
    return Dfa(std::move(support), std::move(new_class), m, std::move(new_delta), std::move(accepting), initial);
}

}  // namespace

Dfa minimize(const Dfa& d) {
    const std::uint32_t k = d.num_classes();

    // Reachable part, numbered in BFS order.
    std::vector<StateId> index(d.num_states(), ~StateId{0});
    std::vector<StateId> order{d.initial()};
    index[d.initial()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::uint32_t c = 0; c < k; ++c) {
            const StateId t = d.next_by_class(order[i], c);
            if (index[t] == ~StateId{0}) {
                index[t] = static_cast<StateId>(order.size());
                order.push_back(t);
            }
        }
    }
    const std::size_t n = order.size();
    std::vector<StateId> delta(n * k);
    std::vector<char> accepting(n);
    for (std::size_t i = 0; i < n; ++i) {
        accepting[i] = d.accepting(order[i]) ? 1 : 0;
        for (std::uint32_t c = 0; c < k; ++c) {
            delta[i * k + c] = index[d.next_by_class(order[i], c)];
        }
    }

    // Inverse transitions per class.
    std::vector<std::vector<std::vector<StateId>>> pre(k, std::vector<std::vector<StateId>>(n));
    for (std::size_t q = 0; q < n; ++q) {
        for (std::uint32_t c = 0; c < k; ++c) {
            pre[c][delta[q * k + c]].push_back(static_cast<StateId>(q));
        }
    }

    // Hopcroft partition refinement.
    std::vector<std::vector<StateId>> blocks;
    std::vector<std::size_t> block_of(n);
    {
        std::vector<StateId> acc;
        std::vector<StateId> rej;
        for (std::size_t q = 0; q < n; ++q) {
            (accepting[q] ? acc : rej).push_back(static_cast<StateId>(q));
        }
        for (auto* b : {&acc, &rej}) {
            if (!b->empty()) {
                for (auto q : *b) {
                    block_of[q] = blocks.size();
                }
                blocks.push_back(std::move(*b));
            }
        }
    }
    std::vector<char> in_work(blocks.size(), 0);
    std::deque<std::size_t> work;
    if (blocks.size() == 2) {
        const std::size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
        work.push_back(smaller);
        in_work[smaller] = 1;
    }
    std::vector<char> marked(n, 0);
    std::vector<std::size_t> touched_count;
    while (!work.empty()) {
        const std::size_t splitter_id = work.front();
        work.pop_front();
        in_work[splitter_id] = 0;
        const std::vector<StateId> splitter = blocks[splitter_id];
        for (std::uint32_t c = 0; c < k; ++c) {
            std::vector<StateId> x;
            for (auto q : splitter) {
                for (auto p : pre[c][q]) {
                    if (!marked[p]) {
                        marked[p] = 1;
                        x.push_back(p);
                    }
                }
            }
            if (x.empty()) {
                continue;
            }
            std::map<std::size_t, std::size_t> hits;
            for (auto p : x) {
                ++hits[block_of[p]];
            }
            for (auto [b, count] : hits) {
                if (count == blocks[b].size()) {
                    continue;
                }
                std::vector<StateId> inside;
                std::vector<StateId> outside;
                for (auto q : blocks[b]) {
                    (marked[q] ? inside : outside).push_back(q);
                }
                const std::size_t nb = blocks.size();
                blocks[b] = std::move(outside);
                for (auto q : inside) {
                    block_of[q] = nb;
                }
                blocks.push_back(std::move(inside));
                in_work.push_back(0);
                if (in_work[b]) {
                    work.push_back(nb);
                    in_work[nb] = 1;
                } else {
                    const std::size_t smaller = blocks[b].size() <= blocks[nb].size() ? b : nb;
                    work.push_back(smaller);
                    in_work[smaller] = 1;
                }
            }
            for (auto p : x) {
                marked[p] = 0;
            }
        }
    }

    // Renumber blocks in BFS order from the initial block for a canonical result.
    const std::size_t m = blocks.size();
    std::vector<StateId> block_index(m, ~StateId{0});
    std::vector<std::size_t> block_order{block_of[0]};
    block_index[block_of[0]] = 0;
    for (std::size_t i = 0; i < block_order.size(); ++i) {
        const StateId rep = blocks[block_order[i]].front();
        for (std::uint32_t c = 0; c < k; ++c) {
            const std::size_t tb = block_of[delta[rep * k + c]];
            if (block_index[tb] == ~StateId{0}) {
                block_index[tb] = static_cast<StateId>(block_order.size());
                block_order.push_back(tb);
            }
        }
    }
    std::vector<StateId> min_delta(m * k);
    std::vector<char> min_accepting(m);
    for (std::size_t i = 0; i < m; ++i) {
        const StateId rep = blocks[block_order[i]].front();
        min_accepting[i] = accepting[rep];
        for (std::uint32_t c = 0; c < k; ++c) {
            min_delta[i * k + c] = block_index[block_of[delta[rep * k + c]]];
        }
    }
    return merge_equal_classes(d.support(), d.letter_classes(), k, min_delta, std::move(min_accepting), 0);
}

Dfa complement(const Dfa& d) {
    std::vector<StateId> delta(d.num_states() * d.num_classes());
    std::vector<char> accepting(d.num_states());
    for (StateId q = 0; q < d.num_states(); ++q) {
        accepting[q] = d.accepting(q) ? 0 : 1;
        for (std::uint32_t c = 0; c < d.num_classes(); ++c) {
            delta[q * d.num_classes() + c] = d.next_by_class(q, c);
        }
    }
    return Dfa(d.support(), {d.letter_classes().begin(), d.letter_classes().end()}, d.num_classes(),
               std::move(delta), std::move(accepting), d.initial());
}

namespace {

struct PairedClasses {
    std::vector<std::uint32_t> letter_class;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // per combined class
};

PairedClasses pair_classes(const Dfa& a, const Dfa& b) {
    if (a.support() != b.support()) {
        throw SupportMismatchError("automata are over different supports");
    }
    PairedClasses out;
    out.letter_class.resize(a.num_letters());
    std::unordered_map<std::uint64_t, std::uint32_t> ids;
    for (Letter x = 0; x < a.num_letters(); ++x) {
        const std::uint64_t key = (std::uint64_t{a.letter_class(x)} << 32) | b.letter_class(x);
        auto [it, inserted] = ids.try_emplace(key, static_cast<std::uint32_t>(out.pairs.size()));
        if (inserted) {
            out.pairs.emplace_back(a.letter_class(x), b.letter_class(x));
        }
        out.letter_class[x] = it->second;
    }
    return out;
}

}  // namespace

Dfa product(const Dfa& a, const Dfa& b, bool conjunctive) {
    PairedClasses pc = pair_classes(a, b);
    const auto k = static_cast<std::uint32_t>(pc.pairs.size());
    std::map<std::pair<StateId, StateId>, StateId> index;
    std::vector<std::pair<StateId, StateId>> states{{a.initial(), b.initial()}};
    index[states[0]] = 0;
    std::vector<StateId> delta;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto [qa, qb] = states[i];
        for (std::uint32_t c = 0; c < k; ++c) {
            const std::pair<StateId, StateId> t{a.next_by_class(qa, pc.pairs[c].first),
                                                b.next_by_class(qb, pc.pairs[c].second)};
            auto [it, inserted] = index.try_emplace(t, static_cast<StateId>(states.size()));
            if (inserted) {
                states.push_back(t);
            }
            delta.push_back(it->second);
        }
    }
    std::vector<char> accepting(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        const bool x = a.accepting(states[i].first);
        const bool y = b.accepting(states[i].second);
        accepting[i] = (conjunctive ? (x && y) : (x || y)) ? 1 : 0;
    }
    return Dfa(a.support(), std::move(pc.letter_class), k, std::move(delta), std::move(accepting), 0);
}

EmptinessResult is_empty(const Dfa& d) {
    const auto order = classes_by_representative(d);
    std::vector<StateId> parent(d.num_states(), ~StateId{0});
    std::vector<Letter> via(d.num_states(), 0);
    std::vector<StateId> queue{d.initial()};
    parent[d.initial()] = d.initial();
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const StateId q = queue[i];
        if (d.accepting(q)) {
            Word w;
            for (StateId s = q; s != d.initial(); s = parent[s]) {
                w.push_back(via[s]);
            }
            std::reverse(w.begin(), w.end());
            return {false, std::move(w)};
        }
        for (auto c : order) {
            const StateId t = d.next_by_class(q, c);
            if (parent[t] == ~StateId{0}) {
                parent[t] = q;
                via[t] = d.class_representatives()[c];
                queue.push_back(t);
            }
        }
    }
    return {true, std::nullopt};
}

InclusionResult language_included(const Dfa& a, const Dfa& b) {
    const PairedClasses pc = pair_classes(a, b);
    std::vector<Letter> reps(pc.pairs.size(), ~Letter{0});
    for (Letter x = 0; x < pc.letter_class.size(); ++x) {
        reps[pc.letter_class[x]] = std::min(reps[pc.letter_class[x]], x);
    }
    // Combined classes are numbered by first letter, so index order is letter order.
    const std::size_t nb = b.num_states();
    auto key = [nb](StateId qa, StateId qb) { return static_cast<std::size_t>(qa) * nb + qb; };
    std::unordered_map<std::size_t, std::pair<std::size_t, Letter>> parent;
    std::vector<std::pair<StateId, StateId>> queue{{a.initial(), b.initial()}};
    parent.emplace(key(a.initial(), b.initial()), std::pair<std::size_t, Letter>{0, 0});
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const auto [qa, qb] = queue[i];
        if (a.accepting(qa) && !b.accepting(qb)) {
            Word w;
            for (std::size_t j = i; j != 0;) {
                const auto& [p, letter] = parent.at(key(queue[j].first, queue[j].second));
                w.push_back(letter);
                j = p;
            }
            std::reverse(w.begin(), w.end());
            return {false, std::move(w)};
        }
        for (std::uint32_t c = 0; c < pc.pairs.size(); ++c) {
            const StateId ta = a.next_by_class(qa, pc.pairs[c].first);
            const StateId tb = b.next_by_class(qb, pc.pairs[c].second);
            if (parent.try_emplace(key(ta, tb), std::pair<std::size_t, Letter>{i, reps[c]}).second) {
                queue.emplace_back(ta, tb);
            }
        }
    }
    return {true, std::nullopt};
}

namespace {

std::vector<char> backward_closure(const Dfa& d, std::vector<char> seed) {
    std::vector<std::vector<StateId>> pre(d.num_states());
    for (StateId q = 0; q < d.num_states(); ++q) {
        for (std::uint32_t c = 0; c < d.num_classes(); ++c) {
            pre[d.next_by_class(q, c)].push_back(q);
        }
    }
    std::vector<StateId> stack;
    for (StateId q = 0; q < d.num_states(); ++q) {
        if (seed[q]) {
            stack.push_back(q);
        }
    }
    while (!stack.empty()) {
        const StateId q = stack.back();
        stack.pop_back();
        for (auto p : pre[q]) {
            if (!seed[p]) {
                seed[p] = 1;
                stack.push_back(p);
            }
        }
    }
    return seed;
}

}  // namespace

std::vector<char> live_states(const Dfa& d) {
    std::vector<char> seed(d.num_states());
    for (StateId q = 0; q < d.num_states(); ++q) {
        seed[q] = d.accepting(q) ? 1 : 0;
    }
    return backward_closure(d, std::move(seed));
}

std::vector<char> universal_states(const Dfa& d) {
    std::vector<char> seed(d.num_states());
    for (StateId q = 0; q < d.num_states(); ++q) {
        seed[q] = d.accepting(q) ? 0 : 1;
    }
    auto can_reject = backward_closure(d, std::move(seed));
    for (auto& x : can_reject) {
        x = x ? 0 : 1;
    }
    return can_reject;
}

std::string letter_to_string(const std::vector<AtomRef>& support, Letter a) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if ((a >> i) & 1) {
            if (!first) {
                out += ",";
            }
            out += to_string(support[i]);
            first = false;
        }
    }
    return out + "}";
}

std::string to_dot(const Dfa& d, std::size_t max_letters_per_edge) {
    std::string out = "digraph monitor {\n  rankdir=LR;\n  init [shape=point];\n";
    for (StateId q = 0; q < d.num_states(); ++q) {
        out += "  q" + std::to_string(q) + " [shape=" + (d.accepting(q) ? "doublecircle" : "circle") + "];\n";
    }
    out += "  init -> q" + std::to_string(d.initial()) + ";\n";
    for (StateId q = 0; q < d.num_states(); ++q) {
        std::map<StateId, std::pair<std::vector<Letter>, std::size_t>> edges;
        for (Letter a = 0; a < d.num_letters(); ++a) {
            auto& [letters, count] = edges[d.next(q, a)];
            if (letters.size() < max_letters_per_edge) {
                letters.push_back(a);
            }
            ++count;
        }
        for (const auto& [t, e] : edges) {
            std::string label;
            for (std::size_t i = 0; i < e.first.size(); ++i) {
                label += (i ? " " : "") + letter_to_string(d.support(), e.first[i]);
            }
            if (e.second > e.first.size()) {
                label += " ...(+" + std::to_string(e.second - e.first.size()) + ")";
            }
            out += "  q" + std::to_string(q) + " -> q" + std::to_string(t) + " [label=\"" + label + "\"];\n";
        }
    }
    return out + "}\n";
}

}  // namespace hypermon
