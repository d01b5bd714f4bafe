#include "hypermon/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "hypermon/error.hpp"

namespace hypermon {

std::string to_string(Verdict::Kind k) {
    switch (k) {
    case Verdict::Kind::clean:
        return "clean";
    case Verdict::Kind::violation:
        return "violation";
    case Verdict::Kind::current_satisfied:
        return "current_satisfied";
    case Verdict::Kind::current_violated:
        return "current_violated";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;
using Index = std::uint32_t;

// A stored trace projected onto the atoms of each variable.
struct Entry {
    Trace trace;
    std::vector<std::vector<Letter>> letters;
};

}  // namespace

struct Session::Impl {
    QuantifiedFormula qf;
    SessionOptions options;
    QuantifierClass cls;
    std::vector<TraceVariable> vars;
    MonitorTemplate monitor;
    std::optional<SpecAnalysisResult> analysis;
    ActiveOptimizations active;
    std::optional<DominanceChecker> checker;
    std::set<std::string> propositions;

    TraceStore store;
    std::map<std::string, Entry> entries;
    std::set<std::string> names;
    std::set<std::string> warned;
    std::vector<std::string> warnings;

    MonitorStats stats;
    Verdict verdict;
    bool frozen = false;

    Impl(QuantifiedFormula f, SessionOptions o)
        : qf(std::move(f)),
          options(std::move(o)),
          cls(classify_prefix(qf)),
          vars(qf.variables()),
          monitor(build_template(qf.body(), vars, collect_alphabet(qf.body()), options.limits)) {
        for (const auto& a : collect_alphabet(qf.body())) {
            propositions.insert(a.proposition);
        }
        if (universal() && options.spec_analysis && cls.n >= 2) {
            analysis = analyze(qf, options.limits);
            active.symmetric = analysis->symmetric();
            active.reflexive = analysis->reflexive();
            active.transitive = cls.n == 2 && analysis->transitive() && active.symmetric && active.reflexive;
        }
        if (options.trace_analysis) {
            try {
                checker.emplace(monitor, cls);
                active.trace_analysis = true;
            } catch (const FragmentError&) {
                warnings.push_back("trace analysis is not available for prefix " + to_string(cls) + "; disabled");
            }
        }
        if (!universal()) {
            verdict.kind = evaluate({}, nullptr) ? Verdict::Kind::current_satisfied : Verdict::Kind::current_violated;
        }
    }

    bool universal() const { return cls.kind == QuantifierClass::Kind::forall_n; }

    Trace project(const Trace& t) {
        Trace out{t.name, {}};
        out.steps.reserve(t.steps.size());
        for (const auto& s : t.steps) {
            Step kept;
            for (const auto& p : s) {
                if (propositions.contains(p)) {
                    kept.insert(p);
                } else if (warned.insert(p).second) {
                    warnings.push_back("proposition '" + p + "' (first seen in trace '" + t.name +
                                       "') does not occur in the formula and is ignored");
                }
            }
            out.steps.push_back(std::move(kept));
        }
        return out;
    }

    Entry make_entry(Trace t) const {
        Entry e{std::move(t), {}};
        for (const auto& v : vars) {
            e.letters.push_back(monitor.project(e.trace, v));
        }
        return e;
    }

    // Rejecting position of the joint run, or nothing when the tuple is accepted.
    std::optional<std::size_t> run(const std::vector<const Entry*>& tuple) const {
        const Dfa& d = monitor.dfa();
        std::size_t len = 0;
        for (const Entry* e : tuple) {
            len = std::max(len, e->trace.size());
        }
        StateId q = d.initial();
        for (std::size_t j = 0;; ++j) {
            if (monitor.is_universal(q)) {
                return std::nullopt;
            }
            if (!monitor.is_live(q)) {
                return j;
            }
            if (j == len) {
                break;
            }
            Letter a = 0;
            for (std::size_t k = 0; k < tuple.size(); ++k) {
                const auto& w = tuple[k]->letters[k];
                if (j < w.size()) {
                    a |= w[j];
                }
            }
            q = d.next(q, a);
        }
        return d.accepting(q) ? std::nullopt : std::optional<std::size_t>(len);
    }

    // Index tuples over candidates 0..m (m = the fresh trace) that mention m,
    // in lexicographic order, after the active reductions.
    std::vector<Index> tuples(Index m) const {
        const std::size_t n = vars.size();
        std::vector<Index> flat;
        if (active.transitive) {
            if (m > 0) {
                flat = {0, m};
            }
            return flat;
        }
        std::vector<Index> cur(n);
        std::function<void(std::size_t, bool)> rec = [&](std::size_t pos, bool has_fresh) {
            if (pos == n) {
                if (active.reflexive && std::all_of(cur.begin(), cur.end(), [&](Index i) { return i == cur[0]; })) {
                    return;
                }
                flat.insert(flat.end(), cur.begin(), cur.end());
                return;
            }
            const Index lo = active.symmetric && pos > 0 ? cur[pos - 1] : 0;
            const Index from = pos + 1 == n && !has_fresh ? m : lo;
            for (Index i = std::max(from, lo); i <= m; ++i) {
                cur[pos] = i;
                rec(pos + 1, has_fresh || i == m);
            }
        };
        rec(0, false);
        return flat;
    }

    // Position in `flat` of the first rejected tuple and its rejecting position.
    std::optional<std::pair<std::size_t, std::size_t>> first_violation(const std::vector<Index>& flat,
                                                                       const std::vector<const Entry*>& cand) const {
        const std::size_t n = vars.size();
        const std::size_t count = n == 0 ? 0 : flat.size() / n;
        auto check_range = [&](std::size_t lo, std::size_t hi, const std::atomic<std::size_t>* best)
            -> std::optional<std::pair<std::size_t, std::size_t>> {
            std::vector<const Entry*> tuple(n);
            for (std::size_t t = lo; t < hi; ++t) {
                if (best && best->load(std::memory_order_relaxed) < t) {
                    return std::nullopt;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    tuple[k] = cand[flat[t * n + k]];
                }
                if (auto pos = run(tuple)) {
                    return std::make_pair(t, *pos);
                }
            }
            return std::nullopt;
        };

        unsigned workers = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
        if (!options.parallel || workers <= 1 || count < 64) {
            return check_range(0, count, nullptr);
        }
        workers = std::min<unsigned>(workers, unsigned(count / 32));
        std::atomic<std::size_t> best{count};
        std::vector<std::optional<std::pair<std::size_t, std::size_t>>> found(workers);
        std::vector<std::thread> pool;
        const std::size_t chunk = (count + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                const std::size_t lo = w * chunk;
                const std::size_t hi = std::min(count, lo + chunk);
                found[w] = check_range(lo, hi, &best);
                if (found[w]) {
                    std::size_t seen = best.load();
                    while (found[w]->first < seen && !best.compare_exchange_weak(seen, found[w]->first)) {
                    }
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
        std::optional<std::pair<std::size_t, std::size_t>> result;
        for (const auto& f : found) {
            if (f && (!result || f->first < result->first)) {
                result = f;
            }
        }
        return result;
    }

    // Quantifier evaluation over the stored traces plus `fresh`, through the template.
    bool evaluate(const std::vector<const Entry*>& extra_cand, std::size_t* runs) const {
        std::vector<const Entry*> cand;
        for (const auto& t : store.traces) {
            cand.push_back(&entries.at(t.name));
        }
        cand.insert(cand.end(), extra_cand.begin(), extra_cand.end());
        std::vector<const Entry*> tuple(vars.size());
        std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
            if (pos == vars.size()) {
                if (runs) {
                    ++*runs;
                }
                return !run(tuple).has_value();
            }
            const bool forall = qf.prefix()[pos].quantifier == Quantifier::forall;
            for (const Entry* e : cand) {
                tuple[pos] = e;
                if (rec(pos + 1) != forall) {
                    return !forall;
                }
            }
            return forall;
        };
        return rec(0);
    }

    // Adds an entry that no stored trace dominates, dropping what it dominates.
    void insert(Entry e) {
        if (checker) {
            std::vector<Trace> kept;
            for (auto& t : store.traces) {
                if (checker->dominates(e.trace, t)) {
                    store.dropped.emplace_back(t.name, e.trace.name);
                    entries.erase(t.name);
                } else {
                    kept.push_back(std::move(t));
                }
            }
            store.traces = std::move(kept);
        }
        store.traces.push_back(e.trace);
        entries.emplace(e.trace.name, std::move(e));
    }

    bool dominated(const Trace& t) {
        if (!checker) {
            return false;
        }
        for (const auto& s : store.traces) {
            if (checker->dominates(s, t)) {
                store.dropped.emplace_back(t.name, s.name);
                return true;
            }
        }
        return false;
    }

    Verdict process(const Trace& raw) {
        if (!names.insert(raw.name).second) {
            throw Error("duplicate trace name '" + raw.name + "'");
        }
        ++stats.traces_seen;
        if (frozen) {
            return verdict;
        }
        Entry fresh = make_entry(project(raw));

        if (!universal()) {
            if (!dominated(fresh.trace)) {
                const bool ok = evaluate({&fresh}, &stats.instances_run);
                verdict.kind = ok ? Verdict::Kind::current_satisfied : Verdict::Kind::current_violated;
                insert(std::move(fresh));
            }
            return verdict;
        }

        if (dominated(fresh.trace)) {
            return Verdict{};
        }
        std::vector<const Entry*> cand;
        for (const auto& t : store.traces) {
            cand.push_back(&entries.at(t.name));
        }
        cand.push_back(&fresh);
        const auto flat = tuples(Index(cand.size() - 1));
        const auto hit = first_violation(flat, cand);
        const std::size_t n = vars.size();
        Verdict result;
        if (hit) {
            stats.instances_run += hit->first + 1;
            CounterExample ce;
            for (std::size_t k = 0; k < n; ++k) {
                ce.tuple.emplace_back(vars[k], cand[flat[hit->first * n + k]]->trace.name);
            }
            ce.rejecting_position = hit->second;
            result = Verdict{Verdict::Kind::violation, std::move(ce)};
            if (!verdict.violated()) {
                verdict = result;
            }
            if (!options.continue_after_violation) {
                frozen = true;
                return result;
            }
        } else {
            stats.instances_run += n == 0 ? 0 : flat.size() / n;
        }
        insert(std::move(fresh));
        return result;
    }
};

Session::Session(QuantifiedFormula qf, SessionOptions options)
    : impl_(std::make_unique<Impl>(std::move(qf), std::move(options))) {}
Session::~Session() = default;
Session::Session(Session&&) noexcept = default;
Session& Session::operator=(Session&&) noexcept = default;

Verdict Session::process_trace(const Trace& t) {
    const auto start = Clock::now();
    Verdict v = impl_->process(t);
    impl_->stats.wall_time += std::chrono::duration<double>(Clock::now() - start).count();
    return v;
}

const Verdict& Session::verdict() const { return impl_->verdict; }

MonitorStats Session::stats() const {
    MonitorStats s = impl_->stats;
    s.traces_stored = impl_->store.traces.size();
    s.inclusion_checks = impl_->checker ? impl_->checker->inclusion_checks() : 0;
    return s;
}

const TraceStore& Session::store() const { return impl_->store; }
const QuantifiedFormula& Session::formula() const { return impl_->qf; }
const QuantifierClass& Session::fragment() const { return impl_->cls; }
const ActiveOptimizations& Session::optimizations() const { return impl_->active; }
const std::optional<SpecAnalysisResult>& Session::spec_analysis() const { return impl_->analysis; }
const MonitorTemplate& Session::monitor() const { return impl_->monitor; }
const std::vector<std::string>& Session::warnings() const { return impl_->warnings; }

Session new_session(QuantifiedFormula qf, SessionOptions options) { return Session(std::move(qf), std::move(options)); }

}  // namespace hypermon
