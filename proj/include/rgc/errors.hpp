#ifndef RGC_ERRORS_HPP
#define RGC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rgc {

// Error categories carried by every exception the library throws.
// Parsers and the CLI map these to distinct user-facing codes.
enum class errc {
    syntax,              // malformed input text/JSON
    not_permutation,     // sigma/iota table is not a permutation of 0..2E-1
    iota_not_involution, // iota*iota != id
    iota_fixed_point,    // iota(h) == h for some half-edge
    disconnected,        // <sigma,iota> does not act transitively
    invalid_graph,       // internal inconsistency (e.g. Euler formula fails)
    bad_selector,        // enumeration selector out of range / non-integer V
    arity_mismatch,      // wrong number of inputs for an operation
    basis_mismatch,      // symbols from different symplectic bases
    degree_error,        // operation rejects this degree (e.g. trace of degree 0)
    truncated,           // requested report would be inexact without acknowledgment
    usage,               // CLI usage error
};

class error : public std::runtime_error {
public:
    error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    errc code() const { return code_; }

    static const char* code_name(errc c) {
        switch (c) {
        case errc::syntax: return "syntax";
        case errc::not_permutation: return "not-permutation";
        case errc::iota_not_involution: return "iota-not-involution";
        case errc::iota_fixed_point: return "iota-fixed-point";
        case errc::disconnected: return "disconnected";
        case errc::invalid_graph: return "invalid-graph";
        case errc::bad_selector: return "bad-selector";
        case errc::arity_mismatch: return "arity-mismatch";
        case errc::basis_mismatch: return "basis-mismatch";
        case errc::degree_error: return "degree-error";
        case errc::truncated: return "truncated";
        case errc::usage: return "usage";
        }
        return "unknown";
    }

private:
    errc code_;
};

} // namespace rgc

#endif
