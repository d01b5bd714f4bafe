#include "hypermon/circuit.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "hypermon/error.hpp"

namespace hypermon::circuit {

namespace {

std::vector<std::string> numbered(const std::string& stem, int width) {
    std::vector<std::string> out;
    for (int i = 0; i < width; ++i) {
        out.push_back(stem + "_" + std::to_string(i));
    }
    return out;
}

std::vector<std::string> concat(std::initializer_list<std::vector<std::string>> parts) {
    std::vector<std::string> out;
    for (const auto& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

// Bits stem_0 .. stem_{width-1} read as an unsigned number, bit 0 least significant.
unsigned read(const Bits& in, const std::string& stem, int width) {
    unsigned v = 0;
    for (int i = 0; i < width; ++i) {
        const std::string name = stem + "_" + std::to_string(i);
        auto it = in.find(name);
        if (it == in.end()) {
            throw CircuitError("missing input bit " + name);
        }
        v |= unsigned(it->second) << i;
    }
    return v;
}

bool read_bit(const Bits& in, const std::string& name) {
    auto it = in.find(name);
    if (it == in.end()) {
        throw CircuitError("missing input bit " + name);
    }
    return it->second;
}

void write(Bits& out, const std::string& stem, int width, unsigned v) {
    for (int i = 0; i < width; ++i) {
        out[stem + "_" + std::to_string(i)] = (v >> i) & 1U;
    }
}

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::string to_string(Kind k) {
    switch (k) {
    case Kind::xor4:
        return "xor4";
    case Kind::mux_comb:
        return "mux_comb";
    case Kind::mux_seq:
        return "mux_seq";
    case Kind::counter3:
        return "counter3";
    }
    return "?";
}

const std::vector<Kind>& all_kinds() {
    static const std::vector<Kind> kinds{Kind::xor4, Kind::mux_comb, Kind::mux_seq, Kind::counter3};
    return kinds;
}

std::optional<Kind> parse_kind(std::string_view name) {
    for (Kind k : all_kinds()) {
        if (to_string(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

const std::vector<std::string>& input_bits(Kind k) {
    static const auto xor_in = concat({numbered("lhs", 4), numbered("rhs", 4)});
    static const auto mux_in = concat({numbered("in1", 4), numbered("in2", 4), {"sel"}});
    static const std::vector<std::string> counter_in{"incr", "decr"};
    switch (k) {
    case Kind::xor4:
        return xor_in;
    case Kind::mux_comb:
    case Kind::mux_seq:
        return mux_in;
    case Kind::counter3:
        return counter_in;
    }
    throw CircuitError("unknown circuit kind");
}

const std::vector<std::string>& output_bits(Kind k) {
    static const auto xor_out = numbered("out", 4);
    static const auto mux_out = concat({numbered("out1", 2), numbered("out2", 2), numbered("combined", 4)});
    static const std::vector<std::string> counter_out{"overflow"};
    switch (k) {
    case Kind::xor4:
        return xor_out;
    case Kind::mux_comb:
    case Kind::mux_seq:
        return mux_out;
    case Kind::counter3:
        return counter_out;
    }
    throw CircuitError("unknown circuit kind");
}

StepResult step(const Model& m, const Bits& inputs) {
    StepResult r{{}, m};
    switch (m.kind) {
    case Kind::xor4:
        write(r.outputs, "out", 4, read(inputs, "lhs", 4) ^ read(inputs, "rhs", 4));
        break;
    case Kind::mux_comb:
    case Kind::mux_seq: {
        const bool sel = read_bit(inputs, "sel");
        const unsigned combined = sel ? read(inputs, "in1", 4) : read(inputs, "in2", 4);
        const unsigned mixed = (combined & 3U) ^ (combined >> 2);
        const unsigned f = m.kind == Kind::mux_seq ? mixed ^ m.state : mixed;
        write(r.outputs, "combined", 4, combined);
        write(r.outputs, "out1", 2, sel ? f : 0U);
        write(r.outputs, "out2", 2, sel ? 0U : f);
        if (m.kind == Kind::mux_seq) {
            r.next.state = m.state ^ mixed;
        }
        break;
    }
    case Kind::counter3: {
        const bool incr = read_bit(inputs, "incr");
        const bool decr = read_bit(inputs, "decr");
        r.outputs["overflow"] = m.state == 7 && incr && !decr;
        if (incr && !decr) {
            r.next.state = (m.state + 1) & 7U;
        } else if (!incr && decr && m.state > 0) {
            r.next.state = m.state - 1;
        }
        break;
    }
    }
    return r;
}

Trace to_trace(const CircuitTrace& ct, std::string name) {
    Trace t{std::move(name), {}};
    for (const auto& bits : ct) {
        Step s;
        for (const auto& [bit, value] : bits) {
            if (value) {
                s.insert(bit);
            }
        }
        t.steps.push_back(std::move(s));
    }
    return t;
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    for (auto& w : s_) {
        w = splitmix64(seed);
    }
}

std::uint64_t Xoshiro256::next() {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

double Xoshiro256::uniform() { return double(next() >> 11) * 0x1.0p-53; }

std::vector<CircuitTrace> random_traces(Kind k, std::size_t n, std::size_t length, std::uint64_t seed,
                                        const Bias& bias) {
    const auto& ins = input_bits(k);
    for (const auto& [bit, p] : bias) {
        if (std::find(ins.begin(), ins.end(), bit) == ins.end()) {
            throw CircuitError("bias given for unknown input bit " + bit);
        }
        if (!(p >= 0.0 && p <= 1.0)) {
            throw CircuitError("bias for " + bit + " is not a probability");
        }
    }
    std::vector<CircuitTrace> out;
    out.reserve(n);
    std::uint64_t stream = seed;
    for (std::size_t i = 0; i < n; ++i) {
        Xoshiro256 rng(splitmix64(stream));
        Model m{k, 0};
        CircuitTrace ct;
        for (std::size_t j = 0; j < length; ++j) {
            Bits inputs;
            for (const auto& bit : ins) {
                auto it = bias.find(bit);
                inputs[bit] = it == bias.end() ? (rng.next() >> 63) != 0 : rng.uniform() < it->second;
            }
            auto r = step(m, inputs);
            Bits all = inputs;
            all.merge(r.outputs);
            ct.push_back(std::move(all));
            m = r.next;
        }
        out.push_back(std::move(ct));
    }
    return out;
}

QuantifiedFormula independence_property(Kind k, const std::vector<std::string>& sources,
                                        const std::vector<std::string>& targets) {
    const auto& ins = input_bits(k);
    const auto& outs = output_bits(k);
    const std::set<std::string> src(sources.begin(), sources.end());
    for (const auto& s : src) {
        if (std::find(ins.begin(), ins.end(), s) == ins.end()) {
            throw CircuitError("'" + s + "' is not an input of " + to_string(k));
        }
    }
    for (const auto& t : targets) {
        if (std::find(outs.begin(), outs.end(), t) == outs.end()) {
            throw CircuitError("'" + t + "' is not an output of " + to_string(k));
        }
    }
    const std::string p = "p";
    const std::string q = "q";
    std::vector<Formula> same_out;
    for (const auto& o : targets) {
        same_out.push_back(iff(atom(o, p), atom(o, q)));
    }
    std::vector<Formula> diff_in;
    for (const auto& x : ins) {
        if (!src.contains(x)) {
            diff_in.push_back(lnot(iff(atom(x, p), atom(x, q))));
        }
    }
    return QuantifiedFormula({{Quantifier::forall, TraceVariable{p}}, {Quantifier::forall, TraceVariable{q}}},
                             weak_until(conjunction(std::move(same_out)), disjunction(std::move(diff_in))));
}

std::vector<std::string> default_sources(Kind k) {
    switch (k) {
    case Kind::xor4:
        return {"lhs_0"};
    case Kind::mux_comb:
    case Kind::mux_seq:
        return numbered("in2", 4);
    case Kind::counter3:
        return {"incr"};
    }
    return {};
}

std::vector<std::string> default_targets(Kind k) {
    switch (k) {
    case Kind::xor4:
        return {"out_0"};
    case Kind::mux_comb:
    case Kind::mux_seq:
        return numbered("out1", 2);
    case Kind::counter3:
        return {"overflow"};
    }
    return {};
}

}  // namespace hypermon::circuit
