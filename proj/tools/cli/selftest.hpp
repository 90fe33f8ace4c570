#pragma once

#include <iosfwd>
#include <string>

namespace artin::cli {

// Oracle equivalence checks at reduced caps; one line per check. Returns true if all pass.
bool run_selftest(const std::string& m_list, std::ostream& out);

}  // namespace artin::cli
