#pragma once

#include <string>
#include <vector>

#include "session.hpp"

namespace wildmoduli::cli {

const std::vector<std::string>& suite_names();

/// Runs a suite with pinned seeds, appending one check per criterion and a
/// summary under outputs[suite].
void reproduce(const std::string& suite, Session& session);

}  // namespace wildmoduli::cli
