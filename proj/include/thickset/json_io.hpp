#pragma once

#include <stdexcept>

#include <json.hpp>

#include "thickset/chroma.hpp"
#include "thickset/complex.hpp"
#include "thickset/k_theory.hpp"
#include "thickset/ks_engine.hpp"
#include "thickset/splitter.hpp"

namespace thickset::io {

using nlohmann::json;

/// Structurally invalid payloads (wrong shape, wrong types). The CLI treats
/// these like JSON parse errors: exit code 2.
struct JsonFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integers are emitted as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise; both forms are accepted on input.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

/// {"ranks": {"0": 1, "1": 1}, "differentials": {"1": [[6]]}}
json complex_to_json(const PerfectComplexZ& c);
PerfectComplexZ complex_from_json(const json& j);

/// {"elements": [...], "relations": [["(h1)", "p0"], ...], "cone_point": "m"}
/// A relation [p, q] declares p <= q, i.e. q lies in V(p).
FinitePrimePoset load_poset(const json& j);

struct PosetFile {
    PosetPtr poset;
    std::optional<std::string> cone_point;
};
PosetFile poset_from_json(const json& j);

/// Spec Z: {"whole": true} or {"primes": [2, 3]}; finite: {"points": [...]}.
json support_to_json(const ThickSupport& s);

/// Also accepts the bare-array shorthand: ["p0", "m"] over a finite model,
/// [2, 3] or "whole" over Spec Z.
ThickSupport support_from_json(const ModelRef& model, const json& j);

json decomposition_to_json(const KSDecomposition& d);

json group_to_json(const FgAbGroup& g);
json homology_to_json(const HomologyProfile& h);
json k0_to_json(const K0Class& k);
json split_to_json(const SplitResult& r);

/// {"whole": true} or {"heights": {"2": 3, "5": 1}}
json spectra_to_json(const SpectraThick& t);
SpectraThick spectra_from_json(const json& j);

}  // namespace thickset::io
