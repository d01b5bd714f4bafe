#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypermon/formula.hpp"
#include "hypermon/semantics.hpp"

namespace hypermon::circuit {

enum class Kind : unsigned char { xor4, mux_comb, mux_seq, counter3 };

std::string to_string(Kind k);
std::optional<Kind> parse_kind(std::string_view name);
const std::vector<Kind>& all_kinds();

/// Bit names in a fixed order: inputs, then outputs.
const std::vector<std::string>& input_bits(Kind k);
const std::vector<std::string>& output_bits(Kind k);

/// Circuit plus its register contents: the 2-bit internal state of mux_seq
/// or the 3-bit counter of counter3. Combinational kinds keep state at 0.
struct Model {
    Kind kind = Kind::xor4;
    unsigned state = 0;
};

using Bits = std::map<std::string, bool>;

struct StepResult {
    Bits outputs;
    Model next;
};

/// One clock cycle: outputs are computed from the current state, then the
/// state is updated. Throws CircuitError if an input bit is missing.
StepResult step(const Model& m, const Bits& inputs);

/// Per-step valuation of every input and output bit.
using CircuitTrace = std::vector<Bits>;

Trace to_trace(const CircuitTrace& ct, std::string name);

/// Probability that an input bit is set; bits not listed use 0.5.
using Bias = std::map<std::string, double>;

/// `n` traces of `length` steps with inputs drawn independently per bit and
/// step. Every trace starts from the reset state and draws from its own
/// xoshiro256** stream derived from `seed` and the trace index, so the output
/// is reproducible across platforms. Throws CircuitError for unknown bias bits.
std::vector<CircuitTrace> random_traces(Kind k, std::size_t n, std::size_t length, std::uint64_t seed,
                                        const Bias& bias = {});

/// forall p. forall q. (AND_{o in targets} o@p <-> o@q) W (OR_{x in inputs \ sources} !(x@p <-> x@q)).
/// Throws CircuitError when a source is not an input or a target not an output.
QuantifiedFormula independence_property(Kind k, const std::vector<std::string>& sources,
                                        const std::vector<std::string>& targets);

/// Default source and target bits of the experiments for each kind.
std::vector<std::string> default_sources(Kind k);
std::vector<std::string> default_targets(Kind k);

/// xoshiro256** seeded through splitmix64.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed);
    std::uint64_t next();
    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform();

private:
    std::uint64_t s_[4];
};

}  // namespace hypermon::circuit
