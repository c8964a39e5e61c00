#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nvol/cone.hpp"
#include "nvol/filtration.hpp"
#include "nvol/okounkov.hpp"

namespace nvol {

/// "name:key=value,..." or "name:arg:arg" / "name:a,b" for positional forms.
struct PresetSpec {
    std::string name;
    std::map<std::string, std::string> params;
    std::vector<std::string> positional;
};
PresetSpec parse_preset(const std::string& text);

/// A preset resolved into everything the cone and filtration commands need.
struct ResolvedPreset {
    std::string text;
    std::string name;
    /// Closed-form curve of the intrinsic filtration (F_F for divisorial presets), with its n and Lvol.
    ClosedFormSource curve;
    /// Section counts for the same filtration, when available.
    std::optional<TabulatedSource> source;
    std::optional<DivisorialData> div;
    std::optional<NormalCone> normal_cone;
    /// The valuation v_1 on the cone, and its filtration by section counts when available.
    std::optional<ConeSetup> setup;
    std::optional<TabulatedSource> setup_source;
};

/// normal-cone:n,p,lambda[,KV,alpha|beta]; pn-hyperplane:n[,alpha|beta]; trivial:n,c[,Lvol];
/// skp:zariski-primes:K (also zariski-primes[:K]). Unknown keys are rejected.
ResolvedPreset resolve_preset(const std::string& text);

/// skp:zariski-primes:K or monomial:a,b
FlagValuation2D resolve_flag_source(const std::string& text);

/// Names with a one-line description, for help output.
std::vector<std::pair<std::string, std::string>> preset_catalog();

}  // namespace nvol
