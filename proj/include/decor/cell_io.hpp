#pragma once

#include <string>

#include <json.hpp>

#include "decor/correlate.hpp"
#include "decor/oracle.hpp"
#include "decor/transform.hpp"

namespace decor::io {

/// Cell document:
/// {
///   "central": <2*S0>,
///   "legs": [<2*s1>, ...],
///   "convention": "physical" | "normalized",
///   "couplings": [{"index": [n1, ...], "value": x}, ...],
///   "s0_self_energy": [e1, ..., e_{2S0+1}]        // optional
/// }
/// Unlisted indices are zero; a repeated index is an error.
DecoratedCell parse_cell(const nlohmann::json& doc);
DecoratedCell load_cell(const std::string& path);

/// Lattice document:
/// {
///   "sigma_sites": N,
///   "sigma_spin": <2*s>,                          // optional, default 1
///   "convention": "physical" | "normalized",
///   "cells": [{"central": ..., "sites": [ids...], "couplings": [...],
///              "s0_self_energy": [...]}, ...]
/// }
oracle::LatticeSpec parse_lattice(const nlohmann::json& doc);
oracle::LatticeSpec load_lattice(const std::string& path);

nlohmann::json couplings_to_json(const EffectiveCouplings& eff);
nlohmann::json alpha_to_json(const AlphaCoefficients& alpha);

/// Round-trip-safe fixed formatting: 17 significant digits, deterministic.
std::string format_double(double value);

}  // namespace decor::io
