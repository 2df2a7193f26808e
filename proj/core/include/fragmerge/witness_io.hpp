#pragma once

#include <string>

#include "fragmerge/distribute.hpp"

namespace fragmerge {

/// Writes a witness as a directory:
///   <dir>/meta.json, <dir>/constraint.kb, <dir>/profile/001.kb, 002.kb, ...
/// The directory is self-contained; `read_witness` rebuilds the witness from
/// disk alone so it can be re-verified later.
void write_witness(const std::string& dir, const DistributionWitness& w);

DistributionWitness read_witness(const std::string& dir);

} // namespace fragmerge
