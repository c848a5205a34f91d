#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coho/checks.hpp"

// Named-object store behind the command surface. A session holds every object
// a command can reference by key, all over one field. Keys are unique across
// kinds, every reference resolves, and every object has passed its axiom
// checks by the time a session exists.

namespace coho {

// One-sided comodule pair under a single key. Either side may be absent; when
// both are present they share the underlying space but are NOT required to
// satisfy the bicomodule compatibility square (the bicomodule kind is for
// that). This is what lets a simple comodule over a matrix coalgebra serve as
// both the right and the left argument of a comparison.
template <class F>
struct PairedComodule {
    std::optional<RightComodule<F>> right;
    std::optional<LeftComodule<F>> left;
};

struct SesRefs {
    std::string m, n, o;
};

struct PivotRefs {
    std::string p, i;
    std::vector<std::string> objects;
};

struct FlipRefs {
    std::string resolved;
    std::vector<PivotRefs> pivots;
};

template <class F>
struct SessionData {
    F f;
    std::map<std::string, FinCoalgebra<F>> coalgebras;
    std::map<std::string, FinAlgebra<F>> algebras;
    std::map<std::string, PairedComodule<F>> comodules;
    std::map<std::string, Bicomodule<F>> bicomodules;
    std::map<std::string, Bimodule<F>> bimodules;
    std::map<std::string, SES<F>> sequences;
    std::map<std::string, FlipSpec<F>> flips;

    // key -> kind, shared across every map above
    std::map<std::string, std::string> kinds;
    // reference keys kept for faithful re-emission
    std::map<std::string, std::string> comodule_over;
    std::map<std::string, std::pair<std::string, std::string>> bicomodule_over;
    std::map<std::string, std::string> bimodule_over;
    std::map<std::string, SesRefs> sequence_refs;
    std::map<std::string, FlipRefs> flip_refs;
};

using Session = std::variant<SessionData<Rationals>, SessionData<PrimeField>>;

// "Q" or "Fp:<p>"
FieldSpec parse_field_spec(const std::string& text);

FieldSpec session_field(const Session& s);

// Parses, resolves references, and validates every object; throws Error with
// the offending key and axiom in the message.
Session parse_session(const std::string& text);
Session load_session(const std::string& path);

// Canonical JSON, byte-stable, reload-identical.
std::string emit_session(const Session& s);

// The shipped corpus for a field: the standard coalgebras and algebras, their
// canonical (bi)comodules, the socle sequence, the split point sequence, and
// the point flip.
Session builtin_session(const FieldSpec& spec);

} // namespace coho
