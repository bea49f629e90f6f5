#pragma once

#include <stdexcept>
#include <string>

namespace isotree {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input text could not be turned into a valid tree.
class ParseError : public Error {
public:
    enum class Kind { MalformedLine, SelfLoop, DuplicateEdge, Cycle, Disconnected };

    ParseError(Kind kind, const std::string& message)
        : Error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

    Kind kind() const { return kind_; }

    static const char* kind_name(Kind k) {
        switch (k) {
            case Kind::MalformedLine: return "malformed line";
            case Kind::SelfLoop: return "self-loop";
            case Kind::DuplicateEdge: return "duplicate edge";
            case Kind::Cycle: return "cycle detected";
            case Kind::Disconnected: return "disconnected";
        }
        return "parse error";
    }

private:
    Kind kind_;
};

/// Caller violated a documented precondition (bad arguments, wrong call order).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Instance is larger than the configured exhaustive-search cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Instance is excluded by the statement of the theorem being applied
/// (e.g. order-k trees for the n/(k+1) bound, O_7 for the 6*-coloring).
class TheoremException : public Error {
public:
    using Error::Error;
};

/// An invariant the algorithms rely on failed at runtime. This never indicates
/// bad input; it indicates a divergence between implementation and proof and
/// must abort loudly.
class InternalCheckError : public Error {
public:
    using Error::Error;
};

/// Size caps for the exhaustive components. Overridable through the
/// ISO_TREES_CAPS environment variable ("key=value,key=value"); raising them
/// is unsafe in the sense that runtimes grow exponentially.
struct Caps {
    int oracle_allk = 18;      // min_isolating_set, AllK / Star specs
    int oracle_pattern = 14;   // min_isolating_set, Pattern specs
    int disjoint = 13;         // max_disjoint_isolating_sets
    int enumerate_n = 10;      // enumerate_trees
    int search_coloring = 12;  // search_coloring
    int hk_t0 = 4;             // |T_0| in verify_Hk_key_observation

    static Caps from_env();
    static Caps parse(const std::string& spec);  // "key=value,key=value" over the env defaults
};

const Caps& caps();
/// Process-wide override (CLI --caps); pass nullptr to clear.
void set_caps_override(const Caps* override_caps);

}  // namespace isotree
