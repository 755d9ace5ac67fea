#pragma once

#include <optional>
#include <map>
#include <string>

#include "ainf/deform.hpp"

namespace ainf {

/// In-memory form of a fixture file. Basis degrees in the file are INTERNAL
/// (unsuspended); the suspension shift happens on load, and reports carry
/// both conventions. Coefficients are exact strings ("3/2", "t", "1+2t").
struct Fixture {
    SpacePtr space;
    RingPtr ring;    // trivial ring when the file has no ring block
    int weight = 3;
    std::optional<Coder> D;    // base A∞ structure, over k
    std::optional<BimodMap> I; // base ∞ inner product, over k
    std::optional<HElem> perturbation; // over ring, h-degree 1
    std::optional<HElem> gauge;        // over ring, h-degree 0
    std::optional<Coder> witness_lambda; // over ring, morphism
    std::optional<BimodMap> witness_rho; // over ring
    std::map<std::string, HElem> elements; // named h-elements over ring

    RingPtr base_ring() const; // trivial ring over the field
    Polarization polarization() const; // requires D and I
};

Fixture parse_fixture(const std::string& json_text);
Fixture parse_fixture_file(const std::string& path);

/// Deterministic normal-form serialization; parse ∘ serialize = id.
std::string serialize_fixture(const Fixture& f);

/// Ring spec strings for the --ring flag: "t_adic:ORDER[:DEGREE]" or
/// "square_zero:name=deg,name=deg,...".
RingPtr parse_ring_spec(const FieldSpec& field, const std::string& spec);

} // namespace ainf
